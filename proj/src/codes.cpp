#include "delsub/codes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "delsub/combinatorics.hpp"
#include "delsub/errors.hpp"
#include "delsub/parallel.hpp"

namespace delsub {

std::string to_string(Family family) {
  switch (family) {
    case Family::C1: return "C1";
    case Family::C2: return "C2";
    case Family::C3: return "C3";
    case Family::C4: return "C4";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "C1" || text == "c1") return Family::C1;
  if (text == "C2" || text == "c2") return Family::C2;
  if (text == "C3" || text == "c3") return Family::C3;
  if (text == "C4" || text == "c4") return Family::C4;
  throw ParseError("unknown code family '" + std::string(text) + "'");
}

Transform transform_of(Family family) {
  return family == Family::C1 || family == Family::C3 ? Transform::F : Transform::G;
}

std::string to_string(ModulusRule rule) {
  switch (rule) {
    case ModulusRule::Exact: return "exact";
    case ModulusRule::DropFactor: return "drop-factor";
    case ModulusRule::OffByOne: return "off-by-one";
  }
  return "?";
}

ModulusRule parse_modulus_rule(std::string_view text) {
  if (text == "exact") return ModulusRule::Exact;
  if (text == "drop-factor") return ModulusRule::DropFactor;
  if (text == "off-by-one") return ModulusRule::OffByOne;
  throw ParseError("unknown modulus rule '" + std::string(text) + "'");
}

std::size_t residue_count(Family family, int t, int s) {
  if (family == Family::C1 || family == Family::C2) return static_cast<std::size_t>(2 * s + 1);
  return static_cast<std::size_t>(2 * t + 2 * s - 1);
}

namespace {

int multiplier(Family family, int q, int t, int s) {
  switch (family) {
    case Family::C1: return 2 * s + 1;
    case Family::C2: return q * (2 * s + 1);
    case Family::C3: return 2 * t + 2 * s - 1;
    case Family::C4: return q * (2 * t + 2 * s - 1);
  }
  return 1;
}

void check_budgets(Family family, int q, int t, int s) {
  check_alphabet(q);
  if (s < 0) throw Error("substitution budget must be non-negative");
  if ((family == Family::C1 || family == Family::C3) && q != 2) {
    throw UnsupportedAlphabet(to_string(family) + " is a binary family");
  }
  if ((family == Family::C3 || family == Family::C4) && t < 1) throw Error("deletion budget must be positive");
  if (family == Family::C1 && t != 1) throw Error("C1 corrects a single deletion (t = 1)");
  if (family == Family::C2 && t != 1 && t != 2) throw Error("C2 is read with t = 1 or t = 2");
  if (family == Family::C2 && t == 2 && (q != 2 || s < 1)) {
    throw Error("C2 with t = 2 is the binary reading and needs s >= 1");
  }
}

}  // namespace

std::vector<BigInt> code_bounds(Family family, int q, std::size_t n, int t, int s) {
  check_budgets(family, q, t, s);
  const std::size_t K1 = residue_count(family, t, s);
  std::vector<BigInt> out;
  for (std::size_t k = 0; k < K1; ++k) {
    BigInt b = BigInt(multiplier(family, q, t, s)) * power_sum(n, static_cast<unsigned>(k));
    if (family == Family::C2) b -= 2 * s + 1;
    if (b < 0) b = 0;
    out.push_back(b);
  }
  return out;
}

std::vector<std::uint64_t> code_moduli(Family family, int q, std::size_t n, int t, int s, ModulusRule rule) {
  const auto bounds = code_bounds(family, q, n, t, s);
  std::vector<std::uint64_t> out;
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    BigInt m;
    switch (rule) {
      case ModulusRule::Exact: m = bounds[k] + 1; break;
      case ModulusRule::DropFactor: m = power_sum(n, static_cast<unsigned>(k)) + 1; break;
      case ModulusRule::OffByOne: m = bounds[k] > 0 ? bounds[k] : BigInt(1); break;
    }
    if (m > BigInt(std::numeric_limits<std::int64_t>::max())) {
      throw Error("modulus for k = " + std::to_string(k) + " exceeds 63 bits; length too large");
    }
    out.push_back(static_cast<std::uint64_t>(m));
  }
  return out;
}

void validate(const CodeParams& params) {
  check_budgets(params.family, params.q, params.t, params.s);
  const auto moduli = code_moduli(params.family, params.q, params.n, params.t, params.s);
  if (params.residues.size() != moduli.size()) {
    throw Error(to_string(params.family) + " needs " + std::to_string(moduli.size()) + " residues, got " +
                std::to_string(params.residues.size()));
  }
  for (std::size_t k = 0; k < moduli.size(); ++k) {
    if (params.residues[k] >= moduli[k]) {
      throw Error("residue a_" + std::to_string(k) + " = " + std::to_string(params.residues[k]) +
                  " outside [0, " + std::to_string(moduli[k] - 1) + "]");
    }
  }
}

bool is_t_good(const Sequence& x, int t) {
  if (x.q() != 2) throw UnsupportedAlphabet("t-good is defined for binary words");
  std::size_t last = 0;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    if (x[i - 1] == 0) continue;
    if (last != 0 && i - last < static_cast<std::size_t>(t)) return false;
    last = i;
  }
  return true;
}

bool is_t_valid(const Sequence& x, int t) {
  std::size_t last = 0;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    if (x[i - 1] == 0) continue;
    if (last != 0 && i - last < static_cast<std::size_t>(t) + 1) return false;
    last = i;
  }
  return true;
}

bool satisfies_structure(const Sequence& x, Family family, int t) {
  if (family == Family::C3) return is_t_good(x, t);
  if (family == Family::C4) return is_t_valid(x, t);
  return true;
}

SyndromeTable::SyndromeTable(Transform transform, std::size_t n, std::vector<std::uint64_t> moduli)
    : transform_(transform), n_(n), moduli_(std::move(moduli)) {
  weights_.resize(moduli_.size());
  powers_.resize(moduli_.size());
  for (std::size_t k = 0; k < moduli_.size(); ++k) {
    const auto m = moduli_[k];
    auto& pw = powers_[k];
    auto& w = weights_[k];
    pw.assign(n + 2, 0);
    w.assign(n + 2, 0);
    for (std::size_t i = 1; i <= n + 1; ++i) {
      std::uint64_t v = 1 % m;
      for (std::size_t e = 0; e < k; ++e) v = mul_mod(v, i % m, m);
      pw[i] = v;
    }
    for (std::size_t i = n; i >= 1; --i) w[i] = add_mod(w[i + 1], pw[i], m);
  }
}

std::vector<std::uint64_t> SyndromeTable::residues(const Sequence& x) const {
  if (x.size() != n_) throw LengthMismatch("word length differs from the code length");
  std::vector<std::uint64_t> out(moduli_.size(), 0);
  const int q = x.q();
  int prev = 0;
  for (std::size_t i = 1; i <= n_; ++i) {
    int v = x[i - 1];
    if (transform_ == Transform::G) {
      const int d = (v - prev + q) % q;
      prev = v;
      v = d;
    }
    if (v == 0) continue;
    for (std::size_t k = 0; k < moduli_.size(); ++k) {
      out[k] = add_mod(out[k], mul_mod(weights_[k][i], static_cast<std::uint64_t>(v), moduli_[k]), moduli_[k]);
    }
  }
  return out;
}

std::vector<std::uint64_t> residue_vector(const Sequence& x, Family family, const std::vector<std::uint64_t>& moduli) {
  return SyndromeTable(transform_of(family), x.size(), moduli).residues(x);
}

bool is_member(const Sequence& x, const CodeParams& params, ModulusRule rule) {
  validate(params);
  if (x.size() != params.n) throw LengthMismatch("word length differs from the code length");
  if (x.q() != params.q) throw UnsupportedAlphabet("word alphabet differs from the code alphabet");
  if (!satisfies_structure(x, params.family, params.t)) return false;
  const auto moduli = code_moduli(params.family, params.q, params.n, params.t, params.s, rule);
  return residue_vector(x, params.family, moduli) == params.residues;
}

namespace {

struct Bucket {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> members;  // word indices, ascending
};

using BucketMap = std::map<std::vector<std::uint64_t>, Bucket>;

BucketMap scan(Family family, int q, std::size_t n, int t, int s, std::uint64_t cap, ModulusRule rule,
               unsigned threads, bool keep, std::uint64_t& eligible) {
  check_budgets(family, q, t, s);
  const auto total = word_count(q, n);
  if (total > cap) {
    throw CapExceeded("enumeration of " + std::to_string(q) + "^" + std::to_string(n) + " words exceeds cap " +
                      std::to_string(cap));
  }
  const SyndromeTable table(transform_of(family), n, code_moduli(family, q, n, t, s, rule));
  const std::uint64_t chunk = 4096;
  const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
  std::vector<BucketMap> partial(chunks);
  std::vector<std::uint64_t> partial_eligible(chunks, 0);
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::uint64_t lo = c * chunk, hi = std::min(total, lo + chunk);
    for (std::uint64_t i = lo; i < hi; ++i) {
      const Sequence x = word_at(i, q, n);
      if (!satisfies_structure(x, family, t)) continue;
      ++partial_eligible[c];
      auto& b = partial[c][table.residues(x)];
      ++b.count;
      if (keep) b.members.push_back(i);
    }
  });
  BucketMap merged;
  eligible = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    eligible += partial_eligible[c];
    for (auto& [key, b] : partial[c]) {
      auto& dst = merged[key];
      dst.count += b.count;
      dst.members.insert(dst.members.end(), b.members.begin(), b.members.end());
    }
  }
  return merged;
}

}  // namespace

std::vector<Sequence> enumerate_code(const CodeParams& params, std::uint64_t enum_cap, ModulusRule rule) {
  validate(params);
  const auto total = word_count(params.q, params.n);
  if (total > enum_cap) {
    throw CapExceeded("enumeration of " + std::to_string(total) + " words exceeds cap " + std::to_string(enum_cap));
  }
  const SyndromeTable table(transform_of(params.family), params.n,
                            code_moduli(params.family, params.q, params.n, params.t, params.s, rule));
  std::vector<Sequence> out;
  for (std::uint64_t i = 0; i < total; ++i) {
    Sequence x = word_at(i, params.q, params.n);
    if (satisfies_structure(x, params.family, params.t) && table.residues(x) == params.residues) {
      out.push_back(std::move(x));
    }
  }
  return out;
}

std::map<std::vector<std::uint64_t>, std::vector<Sequence>> bucket_codes(Family family, int q, std::size_t n, int t,
                                                                           int s, std::uint64_t enum_cap,
                                                                           ModulusRule rule, unsigned threads) {
  std::uint64_t eligible = 0;
  auto buckets = scan(family, q, n, t, s, enum_cap, rule, threads, true, eligible);
  std::map<std::vector<std::uint64_t>, std::vector<Sequence>> out;
  for (auto& [key, b] : buckets) {
    auto& words = out[key];
    words.reserve(b.members.size());
    for (auto i : b.members) words.push_back(word_at(i, q, n));
  }
  return out;
}

BucketSummary best_residues(Family family, int q, std::size_t n, int t, int s, std::uint64_t enum_cap,
                            ModulusRule rule, unsigned threads) {
  BucketSummary out;
  const auto buckets = scan(family, q, n, t, s, enum_cap, rule, threads, false, out.eligible);
  out.best = CodeParams{family, q, n, t, s, {}};
  for (const auto& [key, b] : buckets) {
    if (b.count > out.best_size) {
      out.best_size = b.count;
      out.best.residues = key;
    }
  }
  if (out.best.residues.empty()) out.best.residues.assign(residue_count(family, t, s), 0);
  out.product = 1;
  for (auto m : code_moduli(family, q, n, t, s, rule)) out.product *= m;
  out.floor = (BigInt(out.eligible) + out.product - 1) / out.product;
  out.redundancy_bits = static_cast<double>(n) * std::log2(static_cast<double>(q)) -
                        (out.best_size > 0 ? std::log2(static_cast<double>(out.best_size)) : 0.0);
  return out;
}

SigmaWitness sigma_bound_witness(const Sequence& x, const Sequence& y, Transform transform) {
  if (x.size() != y.size()) throw LengthMismatch("sigma witness needs equal lengths");
  SigmaWitness out;
  out.difference = transform == Transform::F ? accumulative(x) - accumulative(y)
                                             : accumulative_differential(x) - accumulative_differential(y);
  out.sigma = sign_preserving_number(out.difference);
  if (!x.empty()) out.sigma = std::max<std::size_t>(out.sigma, 1);
  return out;
}

std::string to_string(CounterexampleKind kind) {
  switch (kind) {
    case CounterexampleKind::ASNonbinary: return "AS-nonbinary";
    case CounterexampleKind::ASBinary: return "AS-binary";
    case CounterexampleKind::ADSNonbinary: return "ADS-nonbinary";
    case CounterexampleKind::ADSBinary: return "ADS-binary";
  }
  return "?";
}

CounterexampleKind parse_counterexample_kind(std::string_view text) {
  if (text == "AS-nonbinary") return CounterexampleKind::ASNonbinary;
  if (text == "AS-binary") return CounterexampleKind::ASBinary;
  if (text == "ADS-nonbinary") return CounterexampleKind::ADSNonbinary;
  if (text == "ADS-binary") return CounterexampleKind::ADSBinary;
  throw ParseError("unknown counterexample kind '" + std::string(text) + "'");
}

namespace {

std::vector<Symbol> repeat(std::initializer_list<int> block, std::size_t m) {
  std::vector<Symbol> out;
  for (std::size_t r = 0; r < m; ++r) {
    for (int v : block) out.push_back(static_cast<Symbol>(v));
  }
  return out;
}

Sequence join(std::initializer_list<std::vector<Symbol>> pieces, int q) {
  std::vector<Symbol> out;
  for (const auto& p : pieces) out.insert(out.end(), p.begin(), p.end());
  return Sequence(std::move(out), q);
}

}  // namespace

CounterexamplePair counterexample_pair(CounterexampleKind kind, std::size_t m, int q, const Sequence& z) {
  check_alphabet(q);
  if (z.q() != q) throw UnsupportedAlphabet("tail word must use the same alphabet");
  const bool binary = kind == CounterexampleKind::ASBinary || kind == CounterexampleKind::ADSBinary;
  if (binary && q != 2) throw UnsupportedAlphabet(to_string(kind) + " needs q = 2");
  if (!binary && q < 3) throw UnsupportedAlphabet(to_string(kind) + " needs q >= 3");
  const std::vector<Symbol> tail(z.symbols().begin(), z.symbols().end());
  const auto top = static_cast<Symbol>(q - 1);

  switch (kind) {
    case CounterexampleKind::ASNonbinary: {
      auto body = repeat({top, 0}, m);
      return {join({{1}, body, tail}, q), join({body, tail, {1}}, q), 1, Transform::F};
    }
    case CounterexampleKind::ASBinary: {
      auto body = repeat({1, 1, 0, 0}, m);
      return {join({{1, 0}, body, tail}, q), join({body, tail, {1, 0}}, q), 2, Transform::F};
    }
    case CounterexampleKind::ADSNonbinary: {
      const Sequence inner = integrate_differential(join({repeat({top, top, 0, 0}, m), tail}, q));
      const std::vector<Symbol> zp(inner.symbols().begin(), inner.symbols().end());
      return {join({{1, 0}, zp}, q), join({zp, {1, 0}}, q), 2, Transform::G};
    }
    case CounterexampleKind::ADSBinary: {
      const Sequence inner = integrate_differential(join({repeat({1, 1, 1, 0, 0, 0}, m), tail}, q));
      const std::vector<Symbol> zp(inner.symbols().begin(), inner.symbols().end());
      return {join({{1, 1, 0}, zp}, q), join({zp, {1, 1, 0}}, q), 3, Transform::G};
    }
  }
  throw Error("unknown counterexample kind");
}

}  // namespace delsub
