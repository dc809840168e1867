#include "delsub/audit.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "delsub/codes.hpp"
#include "delsub/combinatorics.hpp"
#include "delsub/errors.hpp"
#include "delsub/parallel.hpp"
#include "delsub/partition.hpp"

namespace delsub {

namespace {

void fail(AuditReport& r, const std::string& what) {
  if (r.violations++ == 0) r.first_violation = what;
}

// Entries all in [0, bound] or all in [-bound, 0].
bool one_signed(const IntSequence& d, std::int64_t bound) {
  const bool nonneg = std::all_of(d.entries.begin(), d.entries.end(), [&](auto v) { return v >= 0 && v <= bound; });
  const bool nonpos = std::all_of(d.entries.begin(), d.entries.end(), [&](auto v) { return v <= 0 && v >= -bound; });
  return nonneg || nonpos;
}

// |VT^k(d)| <= scale * sum i^k - slack for k = 0..2.
bool vt_within(const IntSequence& d, int scale, int slack) {
  for (unsigned k = 0; k <= 2; ++k) {
    BigInt v = vt_syndrome(d, k);
    if (v < 0) v = -v;
    if (v > scale * power_sum(d.size(), k) - slack) return false;
  }
  return true;
}

std::string pair_text(const Sequence& x, const Sequence& y) { return "x=" + x.str() + " y=" + y.str(); }

// Calls fn(x, y) for every pair obtained by inserting `len` symbols as one window into a common
// word of length n - len, at every pair of window starts and every content.
void for_each_burst_pair(int q, std::size_t n, std::size_t len,
                         const std::function<void(const Sequence&, const Sequence&)>& fn) {
  if (n < len) return;
  const auto bases = all_words(q, n - len);
  const auto contents = all_words(q, len);
  for (const auto& w : bases) {
    for (std::size_t px = 1; px + len - 1 <= n; ++px) {
      for (const auto& a : contents) {
        Sequence x = w;
        for (std::size_t i = 0; i < len; ++i) x = x.insert(px + i, a[i]);
        for (std::size_t py = px; py + len - 1 <= n; ++py) {
          for (const auto& b : contents) {
            Sequence y = w;
            for (std::size_t i = 0; i < len; ++i) y = y.insert(py + i, b[i]);
            fn(x, y);
          }
        }
      }
    }
  }
}

}  // namespace

AuditReport audit_sign(std::size_t n_max) {
  AuditReport r{"sign", 0, 0, {}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto count = word_count(5, n);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const auto digits = word_at(idx, 5, n);
      IntSequence z;
      for (auto v : digits.symbols()) z.entries.push_back(static_cast<std::int64_t>(v) - 2);
      ++r.cases;
      const auto sigma = sign_preserving_number(z);
      bool vanishing = true;
      for (unsigned k = 0; k < sigma && vanishing; ++k) vanishing = vt_syndrome(z, k) == 0;
      const bool zero = std::all_of(z.entries.begin(), z.entries.end(), [](auto v) { return v == 0; });
      if (vanishing && !zero) fail(r, "z=" + z.str());
    }
  }
  return r;
}

AuditReport audit_single_deletion_f(std::size_t n_max) {
  AuditReport r{"single-deletion-f", 0, 0, {}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    for_each_burst_pair(2, n, 1, [&](const Sequence& x, const Sequence& y) {
      ++r.cases;
      const auto d = accumulative(x) - accumulative(y);
      if (!one_signed(d, 1) || !vt_within(d, 1, 0)) fail(r, pair_text(x, y));
    });
  }
  return r;
}

AuditReport audit_single_deletion_g(int q, std::size_t n_max) {
  AuditReport r{"single-deletion-g q=" + std::to_string(q), 0, 0, {}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    for_each_burst_pair(q, n, 1, [&](const Sequence& x, const Sequence& y) {
      ++r.cases;
      const auto d = accumulative_differential(x) - accumulative_differential(y);
      if (!one_signed(d, q) || std::abs(d[0]) > q - 1 || !vt_within(d, q, 1)) fail(r, pair_text(x, y));
    });
  }
  return r;
}

AuditReport audit_burst_two_g(std::size_t n_max) {
  AuditReport r{"burst-two-g", 0, 0, {}};
  for (std::size_t n = 2; n <= n_max; ++n) {
    for_each_burst_pair(2, n, 2, [&](const Sequence& x, const Sequence& y) {
      ++r.cases;
      const auto d = accumulative_differential(x) - accumulative_differential(y);
      if (!one_signed(d, 2) || std::abs(d[0]) > 1 || !vt_within(d, 2, 1)) fail(r, pair_text(x, y));
    });
  }
  return r;
}

AuditReport audit_good_pairs(int t, std::size_t n_max) {
  AuditReport r{"good-pairs t=" + std::to_string(t), 0, 0, {}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<Sequence> good;
    for (auto& x : all_words(2, n)) {
      if (is_t_good(x, t)) good.push_back(std::move(x));
    }
    for (std::size_t a = 0; a < good.size(); ++a) {
      for (std::size_t b = a + 1; b < good.size(); ++b) {
        if (!burst_balls_intersect(good[a], good[b], t)) continue;
        ++r.cases;
        if (!one_signed(accumulative(good[a]) - accumulative(good[b]), 1)) fail(r, pair_text(good[a], good[b]));
      }
    }
  }
  return r;
}

AuditReport audit_valid_pairs(int q, int t, std::size_t n_max) {
  AuditReport r{"valid-pairs q=" + std::to_string(q) + " t=" + std::to_string(t), 0, 0, {}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<Sequence> valid;
    for (auto& x : all_words(q, n)) {
      if (is_t_valid(x, t)) valid.push_back(std::move(x));
    }
    for (std::size_t a = 0; a < valid.size(); ++a) {
      for (std::size_t b = a + 1; b < valid.size(); ++b) {
        if (!burst_balls_intersect(valid[a], valid[b], t)) continue;
        ++r.cases;
        const auto d = accumulative_differential(valid[a]) - accumulative_differential(valid[b]);
        if (!one_signed(d, q) || std::abs(d[0]) > q - 1) fail(r, pair_text(valid[a], valid[b]));
      }
    }
  }
  return r;
}

AuditReport audit_valid_windows(int q, int t, std::size_t n_max) {
  AuditReport r{"valid-windows q=" + std::to_string(q) + " t=" + std::to_string(t), 0, 0, {}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (const auto& x : all_words(q, n)) {
      if (!is_t_valid(x, t)) continue;
      ++r.cases;
      const auto d = differential(x);
      for (std::size_t i = 0; i < n; ++i) {
        int sum = 0;
        for (std::size_t j = i; j < n && j < i + static_cast<std::size_t>(t); ++j) {
          sum += d[j];
          if (sum > q) {
            fail(r, "x=" + x.str());
            i = n;
            break;
          }
        }
      }
    }
  }
  return r;
}

AuditReport audit_pair_insertion(int q, std::size_t n_max) {
  AuditReport r{"pair-insertion q=" + std::to_string(q), 0, 0, {}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto words = all_words(q, n);
    for (const auto& x : words) {
      for (const auto& y : words) {
        const auto before = sign_preserving_number(accumulative_differential(x) - accumulative_differential(y));
        for (std::size_t p = 1; p <= n; ++p) {
          // x' = x_[1,p] x_{p+1} y_p x_[p+1,n]; x_{n+1} reads as 0.
          const Symbol a = x.at1(static_cast<std::ptrdiff_t>(p + 1));
          const Symbol b = y.at1(static_cast<std::ptrdiff_t>(p));
          const auto xx = x.insert(p + 1, a).insert(p + 2, b);
          const auto yy = y.insert(p + 1, a).insert(p + 2, b);
          ++r.cases;
          const auto after = sign_preserving_number(accumulative_differential(xx) - accumulative_differential(yy));
          if (before > after) fail(r, pair_text(x, y) + " p=" + std::to_string(p));
        }
      }
    }
  }
  return r;
}

AuditReport audit_family_bounds(Family family, int q, std::size_t n, int t, int s, BallKind ball, int ball_t,
                                int ball_s, unsigned threads) {
  AuditReport r{"bounds " + to_string(family) + " q=" + std::to_string(q) + " n=" + std::to_string(n), 0, 0, {}};
  const auto bounds = code_bounds(family, q, n, t, s);
  const auto transform = transform_of(family);
  std::vector<Sequence> words;
  for (auto& x : all_words(q, n)) {
    if (satisfies_structure(x, family, t)) words.push_back(std::move(x));
  }
  std::vector<Ball> balls(words.size());
  parallel_for(words.size(), threads, [&](std::size_t i) {
    balls[i] = ball == BallKind::DelSub        ? del_sub_ball(words[i], ball_t, ball_s)
               : ball == BallKind::DelSubTrans ? del_sub_trans_ball(words[i], ball_t, ball_s)
                                               : burst_deletion_ball(words[i], ball_t);
  });
  std::unordered_map<Sequence, std::vector<std::size_t>> owners;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (const auto& m : balls[i].members) owners[m].push_back(i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [member, list] : owners) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) pairs.emplace_back(list[a], list[b]);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (const auto& [a, b] : pairs) {
    ++r.cases;
    const auto w = sigma_bound_witness(words[a], words[b], transform);
    bool ok = w.sigma <= bounds.size();
    for (std::size_t k = 0; k < bounds.size() && ok; ++k) {
      BigInt v = vt_syndrome(w.difference, static_cast<unsigned>(k));
      if (v < 0) v = -v;
      ok = v <= bounds[k];
    }
    if (!ok) fail(r, pair_text(words[a], words[b]));
  }
  return r;
}

AuditReport audit_partitions(std::size_t n, int t, int s, ChannelModel model, unsigned threads) {
  AuditReport r{"partition n=" + std::to_string(n) + " t=" + std::to_string(t) + " s=" + std::to_string(s) + " " +
                    to_string(model),
                0, 0, {}};
  const auto words = all_words(2, n);
  const std::size_t M = words.size();
  std::vector<Ball> balls(M);
  parallel_for(M, threads, [&](std::size_t i) {
    balls[i] = model == ChannelModel::DS ? del_sub_ball(words[i], t, s) : del_sub_trans_ball(words[i], t, s);
  });
  const std::size_t bound = static_cast<std::size_t>(2 * t + 2 * s - 1);

  struct Row {
    std::uint64_t cases = 0;
    std::uint64_t violations = 0;
    std::string first;
  };
  std::vector<Row> rows(M);
  parallel_for(M, threads, [&](std::size_t a) {
    auto& row = rows[a];
    for (std::size_t b = 0; b < M; ++b) {
      if (a == b) continue;
      ++row.cases;
      const auto& A = balls[a].members;
      const auto& B = balls[b].members;
      bool meet = false;
      for (auto i = A.begin(), j = B.begin(); i != A.end() && j != B.end();) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else {
          meet = true;
          break;
        }
      }
      std::string problem;
      try {
        const auto cert = find_certificate(words[a], words[b], t, s, model);
        if (cert.has_value() != meet) {
          problem = meet ? "no certificate" : "certificate for disjoint balls";
        } else if (cert) {
          if (cert->replay() != words[b]) problem = "certificate does not replay";
          else if (!verify_partition(words[a], words[b], partition_from_certificate(*cert, t), t, bound)) {
            problem = "partition rejected";
          }
        }
      } catch (const InvariantViolation& e) {
        problem = e.what();
      }
      if (!problem.empty() && row.violations++ == 0) row.first = pair_text(words[a], words[b]) + ": " + problem;
    }
  });
  for (const auto& row : rows) {
    r.cases += row.cases;
    if (row.violations && r.violations == 0) r.first_violation = row.first;
    r.violations += row.violations;
  }
  return r;
}

}  // namespace delsub
