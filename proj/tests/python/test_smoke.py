import json

import pytest

import delsub


def test_transforms():
    assert delsub.accumulative_differential("1101") == [1, 1, 2, 3]
    assert delsub.differential("1202", 3) == "1112"
    assert delsub.sign_preserving_number([1, 0, -1, 2]) == 3
    assert delsub.vt_syndrome([1, 1, 2], 1) == 9


def test_balls_and_codes():
    assert delsub.ball("00", "ds", 1, 1) == ["0", "1"]
    assert delsub.ball("10", "dst", 0, 1) == ["00", "01", "10", "11"]
    code = delsub.enumerate_code("C1", 4, [0])
    assert code == ["0000", "0110", "1001", "1111"]
    assert delsub.verify_code(code, "DS(1,0)")["ok"]
    bad = delsub.verify_code(["00", "11"], "DS(1,1)")
    assert not bad["ok"] and bad["counterexample"]["z"] == "0"
    assert delsub.is_member("0110", "C1", [0])


def test_partition():
    p = delsub.partition("00", "11", 1, 1)
    assert p["cuts"] == [0, 1, 2]
    assert delsub.partition("000", "111", 1, 0) is None


def test_codec():
    x = "101101"
    c = delsub.encode(x, 1)
    assert len(c) == delsub.codec_layout(6, 1)["N"] == 146
    assert delsub.decode(c[:40] + c[41:], 6, 1) == x
    with pytest.raises(delsub.DecodeFailure):
        delsub.decode("1111111010", 4, 0)


def test_cli():
    code, out, _ = delsub.run_cli(["--format", "json", "transform", "--op", "g", "1101"])
    assert code == 0 and json.loads(out)["output"] == "1,1,2,3"
    code, _, err = delsub.run_cli(["nope"])
    assert code == 2 and err
