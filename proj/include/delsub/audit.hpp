#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "delsub/codes.hpp"
#include "delsub/error_model.hpp"

namespace delsub {

/// Result of one exhaustive property sweep.
struct AuditReport {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  std::string first_violation;  // human readable, empty when none

  bool ok() const { return violations == 0; }
};

/// z in [-2,2]^n: vanishing VT^k for k < sigma(z) forces z = 0.
AuditReport audit_sign(std::size_t n_max);

/// Single deletion each side: f-difference (q = 2) or g-difference (q >= 2) is one-signed and bounded,
/// and |VT^k| of the difference stays within the matching bound for k <= 2.
AuditReport audit_single_deletion_f(std::size_t n_max);
AuditReport audit_single_deletion_g(int q, std::size_t n_max);

/// Binary pairs agreeing after one length-2 burst each: g-difference in [0,2] or [-2,0].
AuditReport audit_burst_two_g(std::size_t n_max);

/// t-good binary pairs with intersecting D_t balls: f-difference in {0,1} or {-1,0}.
AuditReport audit_good_pairs(int t, std::size_t n_max);
/// t-valid q-ary pairs with intersecting D_t balls: g-difference in [0,q] or [-q,0], |first| <= q-1.
AuditReport audit_valid_pairs(int q, int t, std::size_t n_max);

/// Windows of length <= t of d(x) sum to at most q for every t-valid x.
AuditReport audit_valid_windows(int q, int t, std::size_t n_max);

/// Inserting the pair (x_{p+1}, y_p) after position p into both words never lowers sigma of the g-difference.
AuditReport audit_pair_insertion(int q, std::size_t n_max);

/// Every pair of eligible words whose `ball` balls meet has |VT^k difference| <= n_k for k <= K
/// and sigma of the difference <= K + 1, so the family's congruences separate the pair for any
/// residues. Useful where the residue classes are too small for verify_code to be informative.
AuditReport audit_family_bounds(Family family, int q, std::size_t n, int t, int s, BallKind ball, int ball_t,
                                int ball_s, unsigned threads = 1);

/// Every binary pair of length n with intersecting balls (DS or DST) gets a certificate and a
/// partition into at most 2t+2s-1 parts accepted by verify_partition; a certificate never
/// appears for a pair whose balls are disjoint.
AuditReport audit_partitions(std::size_t n, int t, int s, ChannelModel model, unsigned threads = 1);

}  // namespace delsub
