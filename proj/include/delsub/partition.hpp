#pragma once

#include <optional>
#include <vector>

#include "delsub/error_model.hpp"
#include "delsub/seq_core.hpp"

namespace delsub {

struct Step {
  enum class Kind { Substitution, Transposition };
  Kind kind = Kind::Substitution;
  std::size_t position = 1;
  Symbol symbol = 0;  // new symbol; unused for transpositions

  friend bool operator==(const Step&, const Step&) = default;
};

/// x -> delete I -> insert `inserted` so that it lands at positions J -> z0 -> steps -> y.
/// Steps apply one after another to the running word (not at original coordinates).
struct ErrorCertificate {
  Sequence x;
  Sequence y;
  std::vector<std::size_t> del_x;
  std::vector<std::size_t> ins_z;
  std::vector<Symbol> inserted;
  std::vector<Step> steps;

  /// The equal-length intermediate z0 (deletions and insertions applied, no steps).
  Sequence skeleton() const;
  /// Replays the full chain; equals y for every certificate the searcher emits.
  Sequence replay() const;
};

Sequence apply_step(const Sequence& z, const Step& step);

/// Lexicographically first (I, J[, inserted]) whose skeleton reaches y within 2s steps.
/// DS: steps are substitutions at the mismatches. DST: shortest substitution/transposition path.
std::optional<ErrorCertificate> find_certificate(const Sequence& x, const Sequence& y, int t, int s,
                                                 ChannelModel model);

struct Partition {
  std::vector<std::size_t> cuts;  // 0 = c_0 < c_1 < ... < c_m = n
  std::vector<BurstWitness> witnesses;

  std::size_t parts() const { return cuts.empty() ? 0 : cuts.size() - 1; }
  /// 1-based index of the part holding position p.
  std::size_t part_of(std::size_t p) const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Split for x \ I == z \ J with |I| = |J| = t; at most 2t - 1 parts.
Partition partition_deletions(const Sequence& x, const Sequence& z, std::vector<std::size_t> I,
                              std::vector<std::size_t> J, int t);

/// Partition of x against a moving word z; refinements edit z and split parts.
struct PartitionState {
  Sequence x;
  Sequence z;
  Partition partition;
};

void refine_with_substitution(PartitionState& state, std::size_t position, Symbol symbol, int t);
void refine_with_transposition(PartitionState& state, std::size_t position, int t);

std::optional<Partition> partition_pair(const Sequence& x, const Sequence& y, int t, int s, ChannelModel model);
/// Same, starting from a known certificate.
Partition partition_from_certificate(const ErrorCertificate& cert, int t);

bool verify_partition(const Sequence& x, const Sequence& y, const Partition& p, int t, std::size_t bound);

}  // namespace delsub
