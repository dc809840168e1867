#include "delsub/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>
#include <unordered_map>

#include "delsub/errors.hpp"
#include "delsub/parallel.hpp"

namespace delsub {

std::string to_string(const VerifyMode& mode) {
  switch (mode.kind) {
    case BallKind::DelSub: return "DS(" + std::to_string(mode.t) + "," + std::to_string(mode.s) + ")";
    case BallKind::DelSubTrans: return "DST(" + std::to_string(mode.t) + "," + std::to_string(mode.s) + ")";
    case BallKind::BurstDel: return "Burst(" + std::to_string(mode.t) + ")";
  }
  return "?";
}

namespace {

int parse_int(std::string_view text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("invalid integer '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

VerifyMode parse_verify_mode(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') throw ParseError("mode must look like DS(t,s)");
  const auto name = text.substr(0, open);
  const auto args = text.substr(open + 1, text.size() - open - 2);
  const auto comma = args.find(',');
  VerifyMode mode;
  if (name == "Burst" || name == "burst") {
    if (comma != std::string_view::npos) throw ParseError("Burst takes one argument");
    mode.kind = BallKind::BurstDel;
    mode.t = parse_int(args);
    return mode;
  }
  if (comma == std::string_view::npos) throw ParseError("mode must look like DS(t,s)");
  if (name == "DS" || name == "ds") mode.kind = BallKind::DelSub;
  else if (name == "DST" || name == "dst") mode.kind = BallKind::DelSubTrans;
  else throw ParseError("unknown mode '" + std::string(name) + "'");
  mode.t = parse_int(args.substr(0, comma));
  mode.s = parse_int(args.substr(comma + 1));
  return mode;
}

Ball ball_for(const Sequence& x, const VerifyMode& mode, std::uint64_t cap) {
  switch (mode.kind) {
    case BallKind::DelSub: return del_sub_ball(x, mode.t, mode.s, cap);
    case BallKind::DelSubTrans: return del_sub_trans_ball(x, mode.t, mode.s, cap);
    case BallKind::BurstDel: return burst_deletion_ball(x, mode.t, cap);
  }
  throw Error("unknown ball kind");
}

VerificationReport verify_code(std::vector<Sequence> codewords, const VerifyMode& mode, std::uint64_t ball_cap,
                               unsigned threads) {
  std::sort(codewords.begin(), codewords.end());
  codewords.erase(std::unique(codewords.begin(), codewords.end()), codewords.end());
  for (const auto& c : codewords) {
    if (c.size() != codewords.front().size()) throw LengthMismatch("codewords must share one length");
  }
  VerificationReport report{mode, 0, std::nullopt};
  const std::size_t M = codewords.size();
  report.pairs_checked = static_cast<std::uint64_t>(M) * (M > 0 ? M - 1 : 0) / 2;

  std::vector<Ball> balls(M);
  parallel_for(M, threads, [&](std::size_t i) { balls[i] = ball_for(codewords[i], mode, ball_cap); });

  // The first owner of every member; a member reached again yields the pair (first owner, i),
  // which is the smallest pair containing that member.
  std::unordered_map<Sequence, std::size_t> owner;
  std::optional<std::tuple<std::size_t, std::size_t, Sequence>> best;
  for (std::size_t i = 0; i < M; ++i) {
    for (const auto& z : balls[i].members) {
      auto [it, fresh] = owner.emplace(z, i);
      if (fresh) continue;
      std::tuple<std::size_t, std::size_t, Sequence> cand{it->second, i, z};
      if (!best || cand < *best) best = std::move(cand);
    }
  }
  if (best) {
    const auto& [a, b, z] = *best;
    report.counterexample = Counterexample{codewords[a], codewords[b], z};
  }
  return report;
}

std::string to_string(ResidueStrategy strategy) { return strategy == ResidueStrategy::Best ? "best" : "all"; }

ResidueStrategy parse_residue_strategy(std::string_view text) {
  if (text == "best") return ResidueStrategy::Best;
  if (text == "all") return ResidueStrategy::All;
  throw ParseError("unknown residue strategy '" + std::string(text) + "'");
}

CellSummary verify_family_cell(Family family, int q, std::size_t n, int t, int s, const VerifyMode& mode,
                               ResidueStrategy strategy, ModulusRule rule, std::uint64_t enum_cap,
                               std::uint64_t ball_cap, unsigned threads) {
  CellSummary cell;
  cell.family = family;
  cell.q = q;
  cell.n = n;
  cell.t = t;
  cell.s = s;
  cell.mode = mode;
  cell.rule = rule;

  const auto summary = best_residues(family, q, n, t, s, enum_cap, rule, threads);
  cell.best_size = summary.best_size;
  cell.floor = summary.floor;
  cell.redundancy_bits = summary.redundancy_bits;
  cell.best_residues = summary.best.residues;

  auto record = [&](const std::vector<std::uint64_t>& residues, std::vector<Sequence> words) {
    ++cell.codes_checked;
    const auto report = verify_code(std::move(words), mode, ball_cap, threads);
    if (report.ok()) return;
    ++cell.codes_failed;
    if (!cell.first_counterexample) {
      cell.first_counterexample = report.counterexample;
      cell.failing_residues = residues;
    }
  };

  if (strategy == ResidueStrategy::Best) {
    record(summary.best.residues, enumerate_code(summary.best, enum_cap, rule));
  } else {
    for (auto& [residues, words] : bucket_codes(family, q, n, t, s, enum_cap, rule, threads)) {
      record(residues, std::move(words));
    }
  }
  return cell;
}

}  // namespace delsub
