#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delsub/seq_core.hpp"

namespace delsub {

enum class ChannelModel { DS, DST };

std::string to_string(ChannelModel model);
ChannelModel parse_channel_model(std::string_view text);

/// A concrete corruption. Positions are 1-based in the coordinates of the original word.
/// Substitutions and transpositions are applied first, left to right by position
/// (a substitution before a transposition at the same position), then the deletions.
struct EditScript {
  std::vector<std::size_t> deletions;
  std::vector<std::pair<std::size_t, Symbol>> substitutions;
  std::vector<std::size_t> transpositions;

  bool empty() const { return deletions.empty() && substitutions.empty() && transpositions.empty(); }
  friend bool operator==(const EditScript&, const EditScript&) = default;
};

Sequence apply_script(const Sequence& x, const EditScript& script);

enum class BallKind { DelSub, BurstDel, DelSubTrans };

std::string to_string(BallKind kind);

/// An error ball with its members materialized in sorted order.
struct Ball {
  Sequence center;
  BallKind kind = BallKind::DelSub;
  int t = 0;
  int s = 0;
  std::vector<Sequence> members;

  bool contains(const Sequence& y) const;
  std::size_t size() const { return members.size(); }
};

inline constexpr std::uint64_t kDefaultBallCap = std::uint64_t{1} << 22;

/// All results of deleting one window of length 0..t. Includes x itself.
Ball burst_deletion_ball(const Sequence& x, int t, std::uint64_t cap = kDefaultBallCap);

/// Exactly t deletions and at most s substitutions.
Ball del_sub_ball(const Sequence& x, int t, int s, std::uint64_t cap = kDefaultBallCap);

/// Exactly t deletions and at most s operations, each a substitution or an adjacent
/// transposition. Binary alphabet only.
Ball del_sub_trans_ball(const Sequence& x, int t, int s, std::uint64_t cap = kDefaultBallCap);

/// Witness for D_t(x) ∩ D_t(y) ≠ ∅: deleting x[px, px+length-1] and y[py, py+length-1]
/// leaves the same word. length == 0 means x == y (positions are then reported as 1).
struct BurstWitness {
  int length = 0;
  std::size_t px = 1;
  std::size_t py = 1;

  friend bool operator==(const BurstWitness&, const BurstWitness&) = default;
  friend auto operator<=>(const BurstWitness&, const BurstWitness&) = default;
};

/// Direct O(t n^2) check; returns the lexicographically smallest (length, px, py) witness.
std::optional<BurstWitness> burst_balls_intersect(const Sequence& x, const Sequence& y, int t);

/// True when `w` is a valid burst witness for (x, y).
bool check_burst_witness(const Sequence& x, const Sequence& y, const BurstWitness& w);

struct Corruption {
  Sequence received;
  EditScript script;
};

/// Deterministic channel sample: t distinct deletions plus s substitution-type operations.
///
/// Uses SplitMix64 seeded with `seed`. Draw order:
///  1. deletions: partial Fisher-Yates over [1, n], t draws of `next() % remaining`;
///  2. for each of the s operations: under DST one draw picks the kind
///     (`next() & 1`, 1 = transposition, only when n >= 2), then the position
///     (`next() % n`, or `% (n-1)` for transpositions) and for substitutions the
///     new symbol (`next() % q`, possibly equal to the old one).
Corruption sample_corruption(const Sequence& x, int t, int s, ChannelModel model, std::uint64_t seed);

}  // namespace delsub
