from ._delsub import *  # noqa: F401,F403
from ._delsub import Error, DecodeFailure, CapExceeded, InvariantViolation  # noqa: F401
