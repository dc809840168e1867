#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "delsub/seq_core.hpp"

namespace delsub {

enum class Family { C1, C2, C3, C4 };

std::string to_string(Family family);
Family parse_family(std::string_view text);

/// Which integer word the syndromes are taken over: f(x) or g(x).
enum class Transform { F, G };
Transform transform_of(Family family);

/// How moduli are derived from the family formula. Anything but Exact is a deliberately
/// broken rule used to show that the oracle can fail.
enum class ModulusRule {
  Exact,       // n_k + 1
  DropFactor,  // sum i^k + 1, the multiplier in front of the power sum removed
  OffByOne,    // n_k
};

std::string to_string(ModulusRule rule);
ModulusRule parse_modulus_rule(std::string_view text);

inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t{1} << 26;

/// Family, alphabet, length, budgets and residues a_0..a_K.
/// For C2 the field t selects the reading: 1 = q-ary single deletion with s substitutions,
/// 2 = binary two deletions with s - 1 substitutions. It does not enter the moduli.
struct CodeParams {
  Family family = Family::C1;
  int q = 2;
  std::size_t n = 0;
  int t = 1;
  int s = 0;
  std::vector<std::uint64_t> residues;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// K + 1: the number of congruences.
std::size_t residue_count(Family family, int t, int s);

/// The family's n_k for k = 0..K, exact. Clamped at 0 where the C2 formula goes negative (n = 0).
std::vector<BigInt> code_bounds(Family family, int q, std::size_t n, int t, int s);

/// Moduli for k = 0..K under `rule`. Throws Error when a modulus does not fit in 63 bits.
std::vector<std::uint64_t> code_moduli(Family family, int q, std::size_t n, int t, int s,
                                       ModulusRule rule = ModulusRule::Exact);

/// Throws on alphabet/budget/residue problems.
void validate(const CodeParams& params);

bool is_t_good(const Sequence& x, int t);
bool is_t_valid(const Sequence& x, int t);
/// The structural side condition of the family (none for C1/C2).
bool satisfies_structure(const Sequence& x, Family family, int t);

/// Precomputed weights so that VT^k of f(x) or g(x) is a dot product with x or d(x).
class SyndromeTable {
 public:
  SyndromeTable(Transform transform, std::size_t n, std::vector<std::uint64_t> moduli);

  std::size_t n() const { return n_; }
  const std::vector<std::uint64_t>& moduli() const { return moduli_; }
  Transform transform() const { return transform_; }
  /// W_k(i) = sum_{j=i}^{n} j^k mod m_k, 1-based i.
  std::uint64_t weight(std::size_t k, std::size_t i) const { return weights_[k][i]; }
  /// i^k mod m_k.
  std::uint64_t power(std::size_t k, std::size_t i) const { return powers_[k][i]; }

  std::vector<std::uint64_t> residues(const Sequence& x) const;

 private:
  Transform transform_;
  std::size_t n_;
  std::vector<std::uint64_t> moduli_;
  std::vector<std::vector<std::uint64_t>> weights_;
  std::vector<std::vector<std::uint64_t>> powers_;
};

std::vector<std::uint64_t> residue_vector(const Sequence& x, Family family, const std::vector<std::uint64_t>& moduli);

bool is_member(const Sequence& x, const CodeParams& params, ModulusRule rule = ModulusRule::Exact);

std::vector<Sequence> enumerate_code(const CodeParams& params, std::uint64_t enum_cap = kDefaultEnumCap,
                                     ModulusRule rule = ModulusRule::Exact);

/// Every non-empty residue class of the family over the eligible words (t-good / t-valid
/// where required), keyed by residue vector. Members are sorted.
std::map<std::vector<std::uint64_t>, std::vector<Sequence>> bucket_codes(
    Family family, int q, std::size_t n, int t, int s, std::uint64_t enum_cap = kDefaultEnumCap,
    ModulusRule rule = ModulusRule::Exact, unsigned threads = 1);

struct BucketSummary {
  CodeParams best;
  std::uint64_t best_size = 0;
  std::uint64_t eligible = 0;  // words passing the structural predicate
  BigInt product;              // product of the moduli
  BigInt floor;                // ceil(eligible / product)
  double redundancy_bits = 0;  // n log2 q - log2 best_size
};

/// Largest residue class (the lexicographically smallest residue vector among ties).
BucketSummary best_residues(Family family, int q, std::size_t n, int t, int s,
                            std::uint64_t enum_cap = kDefaultEnumCap, ModulusRule rule = ModulusRule::Exact,
                            unsigned threads = 1);

struct SigmaWitness {
  std::size_t sigma = 0;
  IntSequence difference;
};

/// sigma of transform(x) - transform(y), reported as at least 1 for non-empty words.
SigmaWitness sigma_bound_witness(const Sequence& x, const Sequence& y, Transform transform);

enum class CounterexampleKind { ASNonbinary, ASBinary, ADSNonbinary, ADSBinary };

std::string to_string(CounterexampleKind kind);
CounterexampleKind parse_counterexample_kind(std::string_view text);

struct CounterexamplePair {
  Sequence x;
  Sequence y;
  std::size_t shift = 0;  // x_[shift+1, n] == y_[1, n-shift]
  Transform transform = Transform::F;
};

/// The shifted pairs whose transform differences change sign at least 2m times.
CounterexamplePair counterexample_pair(CounterexampleKind kind, std::size_t m, int q, const Sequence& z);

}  // namespace delsub
