#include "delsub/partition.hpp"

#include <algorithm>
#include <unordered_map>

#include "delsub/combinatorics.hpp"
#include "delsub/errors.hpp"

namespace delsub {

Sequence apply_step(const Sequence& z, const Step& step) {
  return step.kind == Step::Kind::Substitution ? z.with(step.position, step.symbol) : z.swapped(step.position);
}

Sequence ErrorCertificate::skeleton() const {
  const Sequence w = x.erase(del_x);
  if (ins_z.size() != inserted.size()) throw InvalidScript("insertion positions and contents differ in length");
  std::vector<Symbol> out;
  out.reserve(w.size() + ins_z.size());
  std::size_t next_w = 0, next_ins = 0;
  const std::size_t n = w.size() + ins_z.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (next_ins < ins_z.size() && ins_z[next_ins] == p) {
      out.push_back(inserted[next_ins++]);
    } else {
      if (next_w >= w.size()) throw InvalidScript("insertion positions out of range");
      out.push_back(w[next_w++]);
    }
  }
  if (next_ins != ins_z.size()) throw InvalidScript("insertion positions out of range");
  return Sequence(std::move(out), x.q());
}

Sequence ErrorCertificate::replay() const {
  Sequence z = skeleton();
  for (const auto& step : steps) z = apply_step(z, step);
  return z;
}

namespace {

std::size_t hamming(const Sequence& a, const Sequence& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

struct Deleted {
  std::vector<std::size_t> positions;
  Sequence rest;
};

std::vector<Deleted> deletions_of(const Sequence& x, int t) {
  std::vector<Deleted> out;
  for_each_combination(x.size(), static_cast<std::size_t>(t), [&](std::span<const std::size_t> idx) {
    out.push_back({{idx.begin(), idx.end()}, x.erase(idx)});
    return true;
  });
  return out;
}

Sequence merge_insertions(const Sequence& w, std::span<const std::size_t> at, std::span<const Symbol> content) {
  std::vector<Symbol> out;
  const std::size_t n = w.size() + at.size();
  out.reserve(n);
  std::size_t next_w = 0, next_ins = 0;
  for (std::size_t p = 1; p <= n; ++p) {
    if (next_ins < at.size() && at[next_ins] == p) out.push_back(content[next_ins++]);
    else out.push_back(w[next_w++]);
  }
  return Sequence(std::move(out), w.q());
}

struct Parent {
  Sequence from;
  Step op;
};

/// Words within `radius` substitution/transposition steps of y, each with a BFS parent.
std::unordered_map<Sequence, Parent> st_neighbourhood(const Sequence& y, int radius) {
  std::unordered_map<Sequence, Parent> seen;
  seen.emplace(y, Parent{y, {}});
  std::vector<Sequence> frontier{y};
  for (int depth = 0; depth < radius; ++depth) {
    std::vector<Sequence> next;
    for (const auto& u : frontier) {
      for (std::size_t p = 1; p <= u.size(); ++p) {
        for (int v = 0; v < u.q(); ++v) {
          if (v == u[p - 1]) continue;
          Step op{Step::Kind::Substitution, p, static_cast<Symbol>(v)};
          auto w = apply_step(u, op);
          if (seen.emplace(w, Parent{u, op}).second) next.push_back(std::move(w));
        }
        if (p < u.size() && u[p - 1] != u[p]) {
          Step op{Step::Kind::Transposition, p, 0};
          auto w = apply_step(u, op);
          if (seen.emplace(w, Parent{u, op}).second) next.push_back(std::move(w));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

std::optional<ErrorCertificate> find_certificate(const Sequence& x, const Sequence& y, int t, int s,
                                                 ChannelModel model) {
  if (x.size() != y.size()) throw LengthMismatch("certificate search needs equal lengths");
  if (x.q() != y.q()) throw UnsupportedAlphabet("certificate search needs a common alphabet");
  if (t < 0 || static_cast<std::size_t>(t) > x.size() || s < 0) throw Error("bad error budget");
  if (model == ChannelModel::DST && x.q() != 2) throw UnsupportedAlphabet("transposition model is binary only");

  const auto xs = deletions_of(x, t);
  const auto ys = deletions_of(y, t);

  if (model == ChannelModel::DS) {
    for (const auto& [I, w] : xs) {
      for (const auto& [J, v] : ys) {
        if (hamming(w, v) > static_cast<std::size_t>(2 * s)) continue;
        ErrorCertificate cert{x, y, I, J, {}, {}};
        for (auto j : J) cert.inserted.push_back(y[j - 1]);
        const Sequence z0 = merge_insertions(w, J, cert.inserted);
        for (std::size_t p = 1; p <= x.size(); ++p) {
          if (z0[p - 1] != y[p - 1]) cert.steps.push_back({Step::Kind::Substitution, p, y[p - 1]});
        }
        return cert;
      }
    }
    return std::nullopt;
  }

  const auto near_y = st_neighbourhood(y, 2 * s);
  std::vector<Symbol> content(static_cast<std::size_t>(t));
  const auto contents = word_count(2, static_cast<std::size_t>(t));
  for (const auto& [I, w] : xs) {
    for (const auto& [J, v] : ys) {
      (void)v;
      for (std::uint64_t c = 0; c < contents; ++c) {
        const Sequence fill = word_at(c, 2, static_cast<std::size_t>(t));
        content.assign(fill.symbols().begin(), fill.symbols().end());
        Sequence z0 = merge_insertions(w, J, content);
        if (!near_y.contains(z0)) continue;
        ErrorCertificate cert{x, y, I, J, content, {}};
        Sequence cur = z0;
        while (cur != y) {
          const auto& parent = near_y.at(cur);
          Step back = parent.op;
          if (back.kind == Step::Kind::Substitution) back.symbol = parent.from[back.position - 1];
          cert.steps.push_back(back);
          cur = parent.from;
        }
        return cert;
      }
    }
  }
  return std::nullopt;
}

std::size_t Partition::part_of(std::size_t p) const {
  auto it = std::lower_bound(cuts.begin() + 1, cuts.end(), p);
  return static_cast<std::size_t>(it - cuts.begin());
}

namespace {

void deletion_cuts(const std::vector<std::size_t>& I, const std::vector<std::size_t>& J, std::size_t offset,
                   std::size_t n, std::vector<std::size_t>& cuts) {
  const std::size_t t = I.size();
  if (t <= 1) return;
  std::size_t ell = t;
  for (std::size_t l = 1; l <= t; ++l) {
    const std::size_t hi = std::max(I[l - 1], J[l - 1]);
    const std::size_t lo = l < t ? std::min(I[l], J[l]) : n + 1;
    if (hi < lo) {
      ell = l;
      break;
    }
  }
  if (ell < t) {
    const std::size_t split = std::max(I[ell - 1], J[ell - 1]);
    deletion_cuts({I.begin(), I.begin() + static_cast<std::ptrdiff_t>(ell)},
                  {J.begin(), J.begin() + static_cast<std::ptrdiff_t>(ell)}, offset, split, cuts);
    cuts.push_back(offset + split);
    std::vector<std::size_t> I2, J2;
    for (std::size_t l = ell; l < t; ++l) {
      I2.push_back(I[l] - split);
      J2.push_back(J[l] - split);
    }
    deletion_cuts(I2, J2, offset + split, n - split, cuts);
    return;
  }

  // Fully interleaved. i_1 == j_1 would have separated at l = 1 already.
  if (I[0] == J[0]) throw InvariantViolation("interleaved deletion sets share their first index");
  const auto& A = I[0] < J[0] ? I : J;
  const auto& B = I[0] < J[0] ? J : I;
  std::vector<std::pair<std::size_t, bool>> merged;  // (position, from A); ties put A first
  for (auto a : A) merged.emplace_back(a, true);
  for (auto b : B) merged.emplace_back(b, false);
  std::stable_sort(merged.begin(), merged.end(), [](const auto& l, const auto& r) {
    return l.first != r.first ? l.first < r.first : (l.second && !r.second);
  });
  for (std::size_t k = 1; k + 1 < merged.size(); ++k) {
    const auto [p, in_a] = merged[k];
    const std::size_t end = in_a ? p - 1 : p;
    if (end > 0 && end < n) cuts.push_back(offset + end);
  }
}

std::vector<BurstWitness> witnesses_for(const Sequence& x, const Sequence& z, const std::vector<std::size_t>& cuts,
                                        int t) {
  std::vector<BurstWitness> out;
  for (std::size_t k = 1; k < cuts.size(); ++k) {
    auto w = burst_balls_intersect(x.slice(cuts[k - 1] + 1, cuts[k]), z.slice(cuts[k - 1] + 1, cuts[k]), t);
    if (!w) {
      throw InvariantViolation("part [" + std::to_string(cuts[k - 1] + 1) + ", " + std::to_string(cuts[k]) +
                               "] of " + x.str() + " / " + z.str() + " has disjoint burst balls");
    }
    out.push_back(*w);
  }
  return out;
}

void normalise_cuts(std::vector<std::size_t>& cuts, std::size_t n) {
  cuts.push_back(0);
  cuts.push_back(n);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
}

void rewitness(PartitionState& state, int t) {
  normalise_cuts(state.partition.cuts, state.x.size());
  state.partition.witnesses = witnesses_for(state.x, state.z, state.partition.cuts, t);
}

struct LocalPart {
  std::size_t index;  // 1-based part number
  std::size_t first;  // global position of the first symbol
  std::size_t length;
  BurstWitness witness;
};

LocalPart locate(const PartitionState& state, std::size_t position) {
  const auto& p = state.partition;
  if (position < 1 || position > state.x.size()) throw InvalidScript("refinement position out of range");
  const std::size_t k = p.part_of(position);
  return {k, p.cuts[k - 1] + 1, p.cuts[k] - p.cuts[k - 1], p.witnesses[k - 1]};
}

}  // namespace

Partition partition_deletions(const Sequence& x, const Sequence& z, std::vector<std::size_t> I,
                              std::vector<std::size_t> J, int t) {
  if (x.size() != z.size()) throw LengthMismatch("partition needs equal lengths");
  if (t < 1 || I.size() != static_cast<std::size_t>(t) || J.size() != static_cast<std::size_t>(t)) {
    throw InvalidScript("deletion sets must both have t >= 1 entries");
  }
  std::sort(I.begin(), I.end());
  std::sort(J.begin(), J.end());
  if (x.erase(I) != z.erase(J)) throw InvalidScript("deletion sets do not reach a common word");
  Partition p;
  if (x == z) {
    p.cuts = {0, x.size()};  // one part, empty burst
  } else {
    deletion_cuts(I, J, 0, x.size(), p.cuts);
  }
  normalise_cuts(p.cuts, x.size());
  p.witnesses = witnesses_for(x, z, p.cuts, t);
  return p;
}

void refine_with_substitution(PartitionState& state, std::size_t position, Symbol symbol, int t) {
  const auto part = locate(state, position);
  if (state.z[position - 1] == symbol) return;
  state.z = state.z.with(position, symbol);

  const std::size_t L = part.length;
  const std::size_t tw = static_cast<std::size_t>(part.witness.length);
  std::size_t cut = 0;  // local, 0 = keep the part whole
  if (tw > 0) {
    std::size_t px = part.witness.px, pz = part.witness.py, p = position - part.first + 1;
    const bool mirror = pz < px;
    if (mirror) {
      px = L - px - tw + 2;
      pz = L - pz - tw + 2;
      p = L - p + 1;
    }
    if (p < px) cut = p;
    else if (p < pz) cut = p + tw - 1;  // the window of y straddles the substituted symbol
    else cut = pz + tw - 1;
    if (cut >= L) cut = 0;
    if (cut != 0 && mirror) cut = L - cut;
  }
  if (cut != 0) state.partition.cuts.push_back(part.first - 1 + cut);
  rewitness(state, t);
}

void refine_with_transposition(PartitionState& state, std::size_t position, int t) {
  if (state.z.q() != 2) throw UnsupportedAlphabet("transposition refinement is binary only");
  if (position < 1 || position + 1 > state.z.size()) throw InvalidScript("transposition position out of range");
  const auto part = locate(state, position);
  if (state.z[position - 1] == state.z[position]) return;
  state.z = state.z.swapped(position);

  auto& cuts = state.partition.cuts;
  const std::size_t last = part.first + part.length - 1;
  if (position == last) {
    // The swap straddles two parts: carve out the two swapped symbols as their own part.
    cuts.erase(std::find(cuts.begin(), cuts.end(), last));
    cuts.push_back(position - 1);
    cuts.push_back(position + 1);
    rewitness(state, t);
    return;
  }

  const std::size_t L = part.length;
  const std::size_t tw = static_cast<std::size_t>(part.witness.length);
  std::size_t cut = 0;
  if (tw > 0) {
    std::size_t px = part.witness.px, pz = part.witness.py, p = position - part.first + 1;
    const bool mirror = pz < px;
    if (mirror) {
      px = L - px - tw + 2;
      pz = L - pz - tw + 2;
      p = L - p;
    }
    if (p + 1 <= pz) cut = p + 1;
    else if (p + 2 >= pz + tw) cut = p - 1;
    // otherwise both swapped symbols sit inside z's deleted window and the witness survives
    if (cut >= L) cut = 0;
    if (cut != 0 && mirror) cut = L - cut;
  }
  if (cut != 0) cuts.push_back(part.first - 1 + cut);
  rewitness(state, t);
}

Partition partition_from_certificate(const ErrorCertificate& cert, int t) {
  PartitionState state{cert.x, cert.skeleton(), {}};
  state.partition = partition_deletions(cert.x, state.z, cert.del_x, cert.ins_z, t);
  for (const auto& step : cert.steps) {
    if (step.kind == Step::Kind::Substitution) refine_with_substitution(state, step.position, step.symbol, t);
    else refine_with_transposition(state, step.position, t);
  }
  if (state.z != cert.y) throw InvariantViolation("certificate replay did not reach y");
  return state.partition;
}

std::optional<Partition> partition_pair(const Sequence& x, const Sequence& y, int t, int s, ChannelModel model) {
  if (t < 1) throw Error("partitioning needs t >= 1");
  auto cert = find_certificate(x, y, t, s, model);
  if (!cert) return std::nullopt;
  return partition_from_certificate(*cert, t);
}

bool verify_partition(const Sequence& x, const Sequence& y, const Partition& p, int t, std::size_t bound) {
  if (x.size() != y.size()) return false;
  const auto& c = p.cuts;
  if (c.size() < 2 || c.front() != 0 || c.back() != x.size()) return false;
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (c[k] <= c[k - 1]) return false;
  }
  if (p.parts() > bound) return false;
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (!burst_balls_intersect(x.slice(c[k - 1] + 1, c[k]), y.slice(c[k - 1] + 1, c[k]), t)) return false;
  }
  return true;
}

}  // namespace delsub
