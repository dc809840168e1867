#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delsub/codes.hpp"
#include "delsub/error_model.hpp"
#include "delsub/seq_core.hpp"

namespace delsub {

/// Error model a code is checked against.
struct VerifyMode {
  BallKind kind = BallKind::DelSub;
  int t = 1;
  int s = 0;

  friend bool operator==(const VerifyMode&, const VerifyMode&) = default;
};

std::string to_string(const VerifyMode& mode);
/// "DS(1,0)", "DST(1,1)", "Burst(2)".
VerifyMode parse_verify_mode(std::string_view text);

Ball ball_for(const Sequence& x, const VerifyMode& mode, std::uint64_t cap = kDefaultBallCap);

struct Counterexample {
  Sequence x;
  Sequence y;
  Sequence z;  // common ball member

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  VerifyMode mode;
  std::uint64_t pairs_checked = 0;
  std::optional<Counterexample> counterexample;

  bool ok() const { return !counterexample.has_value(); }
};

/// Pairwise ball-disjointness. All pairs are examined; the reported counterexample is the
/// lexicographically first pair (by codeword order after sorting) with its smallest common member.
VerificationReport verify_code(std::vector<Sequence> codewords, const VerifyMode& mode,
                               std::uint64_t ball_cap = kDefaultBallCap, unsigned threads = 1);

enum class ResidueStrategy { Best, All };

std::string to_string(ResidueStrategy strategy);
ResidueStrategy parse_residue_strategy(std::string_view text);

struct CellSummary {
  Family family = Family::C1;
  int q = 2;
  std::size_t n = 0;
  int t = 1;
  int s = 0;
  VerifyMode mode;
  ModulusRule rule = ModulusRule::Exact;
  std::size_t codes_checked = 0;
  std::size_t codes_failed = 0;
  std::uint64_t best_size = 0;
  BigInt floor;
  double redundancy_bits = 0;
  std::vector<std::uint64_t> best_residues;
  std::optional<Counterexample> first_counterexample;
  std::vector<std::uint64_t> failing_residues;  // residues of the code holding first_counterexample

  bool ok() const { return codes_failed == 0; }
};

/// Enumerates the family's codes for one parameter cell (the largest class, or every
/// non-empty class) and verifies each against `mode`.
CellSummary verify_family_cell(Family family, int q, std::size_t n, int t, int s, const VerifyMode& mode,
                               ResidueStrategy strategy, ModulusRule rule = ModulusRule::Exact,
                               std::uint64_t enum_cap = kDefaultEnumCap, std::uint64_t ball_cap = kDefaultBallCap,
                               unsigned threads = 1);

}  // namespace delsub
