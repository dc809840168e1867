#include "delsub/error_model.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "delsub/errors.hpp"
#include "delsub/rng.hpp"

namespace delsub {

std::string to_string(ChannelModel model) { return model == ChannelModel::DS ? "DS" : "DST"; }

ChannelModel parse_channel_model(std::string_view text) {
  if (text == "DS" || text == "ds") return ChannelModel::DS;
  if (text == "DST" || text == "dst") return ChannelModel::DST;
  throw ParseError("unknown channel model '" + std::string(text) + "'");
}

std::string to_string(BallKind kind) {
  switch (kind) {
    case BallKind::DelSub: return "DelSub";
    case BallKind::BurstDel: return "BurstDel";
    case BallKind::DelSubTrans: return "DelSubTrans";
  }
  return "?";
}

Sequence apply_script(const Sequence& x, const EditScript& script) {
  const std::size_t n = x.size();
  struct Op {
    std::size_t pos;
    int order;  // 0 = substitution, 1 = transposition
    Symbol symbol;
  };
  std::vector<Op> ops;
  for (auto [pos, sym] : script.substitutions) {
    if (pos < 1 || pos > n) throw InvalidScript("substitution position " + std::to_string(pos) + " out of range");
    if (sym >= x.q()) throw InvalidScript("substituted symbol outside alphabet");
    ops.push_back({pos, 0, sym});
  }
  for (auto pos : script.transpositions) {
    if (pos < 1 || pos + 1 > n) throw InvalidScript("transposition position " + std::to_string(pos) + " out of range");
    ops.push_back({pos, 1, 0});
  }
  std::stable_sort(ops.begin(), ops.end(), [](const Op& a, const Op& b) {
    return a.pos != b.pos ? a.pos < b.pos : a.order < b.order;
  });
  Sequence y = x;
  for (const auto& op : ops) y = op.order == 0 ? y.with(op.pos, op.symbol) : y.swapped(op.pos);
  for (auto pos : script.deletions) {
    if (pos < 1 || pos > n) throw InvalidScript("deletion position " + std::to_string(pos) + " out of range");
  }
  return y.erase(script.deletions);
}

bool Ball::contains(const Sequence& y) const { return std::binary_search(members.begin(), members.end(), y); }

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const auto num = sat_mul(r, n - k + i);
    if (num == UINT64_MAX) return UINT64_MAX;
    r = num / i;
  }
  return r;
}

void check_cap(std::uint64_t bound, std::uint64_t cap, const char* what) {
  if (bound > cap) {
    throw CapExceeded(std::string(what) + " ball bound " + std::to_string(bound) + " exceeds cap " +
                      std::to_string(cap));
  }
}

void check_t(const Sequence& x, int t) {
  if (t < 0 || static_cast<std::size_t>(t) > x.size()) throw Error("deletion count must lie in [0, |x|]");
}

/// All distinct words obtained by deleting exactly t positions.
std::unordered_set<Sequence> deletion_results(const Sequence& x, int t) {
  std::unordered_set<Sequence> out;
  const std::size_t n = x.size();
  std::vector<std::size_t> idx(static_cast<std::size_t>(t));
  std::iota(idx.begin(), idx.end(), std::size_t{1});
  while (true) {
    out.insert(x.erase(idx));
    int i = t - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - static_cast<std::size_t>(t - 1 - i)) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

void substitution_closure(const Sequence& w, int s, std::size_t from, std::unordered_set<Sequence>& out) {
  out.insert(w);
  if (s == 0) return;
  for (std::size_t p = from; p <= w.size(); ++p) {
    for (int v = 0; v < w.q(); ++v) {
      if (v == w[p - 1]) continue;
      substitution_closure(w.with(p, static_cast<Symbol>(v)), s - 1, p + 1, out);
    }
  }
}

Ball finish(const Sequence& x, BallKind kind, int t, int s, std::unordered_set<Sequence>&& set) {
  Ball ball{x, kind, t, s, {set.begin(), set.end()}};
  std::sort(ball.members.begin(), ball.members.end());
  return ball;
}

}  // namespace

Ball burst_deletion_ball(const Sequence& x, int t, std::uint64_t cap) {
  if (t < 1) throw Error("burst length must be positive");
  check_t(x, t);
  check_cap(sat_add(sat_mul(static_cast<std::uint64_t>(t), x.size()), 1), cap, "burst-deletion");
  std::unordered_set<Sequence> set{x};
  for (int len = 1; len <= t; ++len) {
    for (std::size_t p = 1; p + static_cast<std::size_t>(len) - 1 <= x.size(); ++p) {
      set.insert(x.slice(1, p - 1).concat(x.slice(p + static_cast<std::size_t>(len), x.size())));
    }
  }
  return finish(x, BallKind::BurstDel, t, 0, std::move(set));
}

Ball del_sub_ball(const Sequence& x, int t, int s, std::uint64_t cap) {
  check_t(x, t);
  if (s < 0) throw Error("substitution count must be non-negative");
  const std::uint64_t n = x.size();
  std::uint64_t subs = 0;
  for (int j = 0; j <= s; ++j) {
    std::uint64_t term = binomial(n - static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(j));
    for (int r = 0; r < j; ++r) term = sat_mul(term, static_cast<std::uint64_t>(x.q() - 1));
    subs = sat_add(subs, term);
  }
  check_cap(sat_mul(binomial(n, static_cast<std::uint64_t>(t)), subs), cap, "deletion-substitution");

  std::unordered_set<Sequence> set;
  for (const auto& w : deletion_results(x, t)) substitution_closure(w, s, 1, set);
  return finish(x, BallKind::DelSub, t, s, std::move(set));
}

Ball del_sub_trans_ball(const Sequence& x, int t, int s, std::uint64_t cap) {
  if (x.q() != 2) throw UnsupportedAlphabet("substitution-transposition balls are defined for q = 2 only");
  check_t(x, t);
  if (s < 0) throw Error("substitution count must be non-negative");
  const std::uint64_t n = x.size();
  std::uint64_t per_level = sat_add(n, n > 0 ? n - 1 : 0);
  std::uint64_t ops = 1, level = 1;
  for (int j = 0; j < s; ++j) {
    level = sat_mul(level, per_level);
    ops = sat_add(ops, level);
  }
  check_cap(sat_mul(binomial(n, static_cast<std::uint64_t>(t)), ops), cap, "deletion-substitution-transposition");

  // Breadth-first closure under <= s substitution/transposition steps, then t deletions.
  std::unordered_set<Sequence> reached{x};
  std::vector<Sequence> frontier{x};
  for (int step = 0; step < s; ++step) {
    std::vector<Sequence> next;
    for (const auto& w : frontier) {
      for (std::size_t p = 1; p <= w.size(); ++p) {
        auto a = w.with(p, static_cast<Symbol>(1 - w[p - 1]));
        if (reached.insert(a).second) next.push_back(std::move(a));
        if (p < w.size() && w[p - 1] != w[p]) {
          auto b = w.swapped(p);
          if (reached.insert(b).second) next.push_back(std::move(b));
        }
      }
    }
    frontier = std::move(next);
  }
  std::unordered_set<Sequence> set;
  for (const auto& w : reached) {
    auto dels = deletion_results(w, t);
    set.insert(dels.begin(), dels.end());
  }
  return finish(x, BallKind::DelSubTrans, t, s, std::move(set));
}

bool check_burst_witness(const Sequence& x, const Sequence& y, const BurstWitness& w) {
  if (x.size() != y.size()) return false;
  if (w.length == 0) return x == y;
  const auto len = static_cast<std::size_t>(w.length);
  if (w.px < 1 || w.py < 1 || w.px + len - 1 > x.size() || w.py + len - 1 > y.size()) return false;
  std::vector<std::size_t> wx(len), wy(len);
  std::iota(wx.begin(), wx.end(), w.px);
  std::iota(wy.begin(), wy.end(), w.py);
  return x.erase(wx) == y.erase(wy);
}

std::optional<BurstWitness> burst_balls_intersect(const Sequence& x, const Sequence& y, int t) {
  if (x.size() != y.size()) throw LengthMismatch("burst-deletion intersection needs equal lengths");
  const std::size_t n = x.size();
  // direct[i] = mismatches x_k != y_k for k <= i.
  std::vector<std::size_t> direct(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) direct[i] = direct[i - 1] + (x[i - 1] != y[i - 1]);
  if (direct[n] == 0) return BurstWitness{0, 1, 1};

  std::vector<std::size_t> ahead(n + 1), behind(n + 1);
  for (int d = 1; d <= t && static_cast<std::size_t>(d) <= n; ++d) {
    const auto sd = static_cast<std::size_t>(d);
    // ahead[i]  = #{k <= i : x_k != y_{k-d}},  k > d
    // behind[i] = #{j <= i : x_j != y_{j+d}},  j + d <= n
    ahead[0] = behind[0] = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      ahead[i] = ahead[i - 1] + (i > sd && x[i - 1] != y[i - 1 - sd]);
      behind[i] = behind[i - 1] + (i + sd <= n && x[i - 1] != y[i - 1 + sd]);
    }
    const std::size_t last = n - sd + 1;
    for (std::size_t px = 1; px <= last; ++px) {
      for (std::size_t py = 1; py <= last; ++py) {
        const std::size_t lo = std::min(px, py), hi = std::max(px, py);
        if (direct[lo - 1] != 0) continue;
        if (direct[n] - direct[hi + sd - 1] != 0) continue;
        bool middle;
        if (px <= py) {
          middle = ahead[py + sd - 1] - ahead[px + sd - 1] == 0;
        } else {
          middle = behind[px - 1] - behind[py - 1] == 0;
        }
        if (middle) return BurstWitness{d, px, py};
      }
    }
  }
  return std::nullopt;
}

Corruption sample_corruption(const Sequence& x, int t, int s, ChannelModel model, std::uint64_t seed) {
  check_t(x, t);
  if (s < 0) throw Error("substitution count must be non-negative");
  const std::size_t n = x.size();
  SplitMix64 rng(seed);
  Corruption out;

  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{1});
  for (std::size_t i = 0; i < static_cast<std::size_t>(t); ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  out.script.deletions.assign(pool.begin(), pool.begin() + t);
  std::sort(out.script.deletions.begin(), out.script.deletions.end());

  if (n > 0) {
    for (int k = 0; k < s; ++k) {
      bool transpose = false;
      if (model == ChannelModel::DST) transpose = (rng.next() & 1u) != 0 && n >= 2;
      if (transpose) {
        out.script.transpositions.push_back(1 + static_cast<std::size_t>(rng.below(n - 1)));
      } else {
        const auto pos = 1 + static_cast<std::size_t>(rng.below(n));
        const auto sym = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(x.q())));
        out.script.substitutions.emplace_back(pos, sym);
      }
    }
  }
  out.received = apply_script(x, out.script);
  return out;
}

}  // namespace delsub
