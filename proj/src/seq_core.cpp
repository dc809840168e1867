#include "delsub/seq_core.hpp"

#include <algorithm>
#include <charconv>

#include "delsub/errors.hpp"

namespace delsub {

void check_alphabet(int q) {
  if (q < kMinAlphabet || q > kMaxAlphabet) {
    throw UnsupportedAlphabet("alphabet size must lie in [2, 16], got " + std::to_string(q));
  }
}

Sequence::Sequence(int q) : q_(q) { check_alphabet(q); }

Sequence::Sequence(std::vector<Symbol> symbols, int q) : symbols_(std::move(symbols)), q_(q) {
  check_alphabet(q);
  for (auto s : symbols_) {
    if (s >= q) throw ParseError("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(q));
  }
}

Sequence Sequence::parse(std::string_view text, int q) {
  check_alphabet(q);
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) {
    int v = -1;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    if (v < 0 || v >= q) {
      throw ParseError(std::string("invalid digit '") + c + "' for alphabet size " + std::to_string(q));
    }
    out.push_back(static_cast<Symbol>(v));
  }
  Sequence x(q);
  x.symbols_ = std::move(out);
  return x;
}

Sequence Sequence::zeros(std::size_t n, int q) {
  Sequence x(q);
  x.symbols_.assign(n, 0);
  return x;
}

Sequence Sequence::slice(std::size_t first, std::size_t last) const {
  Sequence out(q_);
  if (first < 1) first = 1;
  if (last > size()) last = size();
  if (first > last) return out;
  out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(first - 1),
                      symbols_.begin() + static_cast<std::ptrdiff_t>(last));
  return out;
}

Sequence Sequence::reversed() const {
  Sequence out = *this;
  std::reverse(out.symbols_.begin(), out.symbols_.end());
  return out;
}

Sequence Sequence::concat(const Sequence& other) const {
  Sequence out = *this;
  out.symbols_.insert(out.symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  return out;
}

Sequence Sequence::erase(std::span<const std::size_t> positions) const {
  std::vector<bool> drop(size() + 1, false);
  for (auto p : positions) {
    if (p < 1 || p > size() || drop[p]) throw InvalidScript("bad deletion position " + std::to_string(p));
    drop[p] = true;
  }
  Sequence out(q_);
  out.symbols_.reserve(size() - positions.size());
  for (std::size_t i = 1; i <= size(); ++i) {
    if (!drop[i]) out.symbols_.push_back(symbols_[i - 1]);
  }
  return out;
}

Sequence Sequence::insert(std::size_t position, Symbol value) const {
  if (position < 1 || position > size() + 1) throw InvalidScript("bad insertion position");
  Sequence out = *this;
  out.symbols_.insert(out.symbols_.begin() + static_cast<std::ptrdiff_t>(position - 1), value);
  return out;
}

Sequence Sequence::with(std::size_t position, Symbol value) const {
  if (position < 1 || position > size()) throw InvalidScript("bad substitution position");
  if (value >= q_) throw InvalidScript("substituted symbol outside alphabet");
  Sequence out = *this;
  out.symbols_[position - 1] = value;
  return out;
}

Sequence Sequence::swapped(std::size_t position) const {
  if (position < 1 || position + 1 > size()) throw InvalidScript("bad transposition position");
  Sequence out = *this;
  std::swap(out.symbols_[position - 1], out.symbols_[position]);
  return out;
}

char symbol_char(Symbol s) { return static_cast<char>(s < 10 ? '0' + s : 'a' + (s - 10)); }

std::string Sequence::str() const {
  std::string out;
  out.reserve(size());
  for (auto s : symbols_) out.push_back(symbol_char(s));
  return out;
}

IntSequence IntSequence::parse(std::string_view text) {
  IntSequence z;
  if (text.empty()) return z;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("invalid integer entry '" + std::string(token) + "'");
    }
    z.entries.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return z;
}

IntSequence IntSequence::from(const Sequence& x) {
  IntSequence z;
  z.entries.assign(x.symbols().begin(), x.symbols().end());
  return z;
}

std::string IntSequence::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(entries[i]);
  }
  return out;
}

IntSequence operator-(const IntSequence& a, const IntSequence& b) {
  if (a.size() != b.size()) throw LengthMismatch("difference of integer words of unequal length");
  IntSequence out;
  out.entries.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.entries[i] = a.entries[i] - b.entries[i];
  return out;
}

IntSequence accumulative(const Sequence& x) {
  IntSequence out;
  out.entries.resize(x.size());
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += x[i];
    out.entries[i] = acc;
  }
  return out;
}

Sequence differential(const Sequence& x) {
  std::vector<Symbol> d(x.size());
  const int q = x.q();
  int prev = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    d[i] = static_cast<Symbol>((x[i] - prev + q) % q);
    prev = x[i];
  }
  return Sequence(std::move(d), q);
}

Sequence integrate_differential(const Sequence& d) {
  std::vector<Symbol> x(d.size());
  const int q = d.q();
  int acc = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    acc = (acc + d[i]) % q;
    x[i] = static_cast<Symbol>(acc);
  }
  return Sequence(std::move(x), q);
}

IntSequence accumulative_differential(const Sequence& x) {
  IntSequence out;
  out.entries.resize(x.size());
  const int q = x.q();
  int prev = 0;
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += (x[i] - prev + q) % q;
    prev = x[i];
    out.entries[i] = acc;
  }
  return out;
}

std::size_t sign_preserving_number(std::span<const std::int64_t> z) {
  if (z.empty()) return 0;
  std::size_t parts = 1;
  int current = 0;  // sign of the open part; 0 while it has seen only zeros
  for (auto v : z) {
    if (v == 0) continue;
    const int sign = v > 0 ? 1 : -1;
    if (current == 0) {
      current = sign;
    } else if (sign != current) {
      ++parts;
      current = sign;
    }
  }
  return parts;
}

BigInt vt_syndrome(std::span<const std::int64_t> z, unsigned k) {
  BigInt total = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == 0) continue;
    BigInt w = boost::multiprecision::pow(BigInt(i + 1), k);
    total += w * z[i];
  }
  return total;
}

std::uint64_t reduce_mod(std::int64_t v, std::uint64_t m) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % m;
  const std::uint64_t r = static_cast<std::uint64_t>(-(v + 1)) % m;  // avoids overflow at INT64_MIN
  return (m - 1 - r) % m;
}

std::uint64_t vt_syndrome_mod(std::span<const std::int64_t> z, unsigned k, std::uint64_t modulus) {
  if (modulus == 0) throw Error("modulus must be positive");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    std::uint64_t w = 1 % modulus;
    const std::uint64_t base = (i + 1) % modulus;
    for (unsigned e = 0; e < k; ++e) w = mul_mod(w, base, modulus);
    total = add_mod(total, mul_mod(w, reduce_mod(z[i], modulus), modulus), modulus);
  }
  return total;
}

BigInt power_sum(std::size_t n, unsigned k) {
  BigInt total = 0;
  for (std::size_t i = 1; i <= n; ++i) total += boost::multiprecision::pow(BigInt(i), k);
  return total;
}

}  // namespace delsub
