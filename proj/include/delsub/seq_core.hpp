#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace delsub {

using Symbol = std::uint8_t;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMinAlphabet = 2;
inline constexpr int kMaxAlphabet = 16;

/// A word over the alphabet {0, ..., q-1}, stored one byte per symbol.
///
/// Element access is 0-based through operator[]; the 1-based accessor
/// `at1` follows the convention that indices outside [1, n] read as 0.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(int q);
  Sequence(std::vector<Symbol> symbols, int q);

  /// Parses base-q digits 0-9, a-f (position 1 first). Throws ParseError.
  static Sequence parse(std::string_view text, int q);
  static Sequence zeros(std::size_t n, int q);

  int q() const noexcept { return q_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
  Symbol at1(std::ptrdiff_t i) const noexcept {
    return (i >= 1 && static_cast<std::size_t>(i) <= symbols_.size()) ? symbols_[i - 1] : Symbol{0};
  }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  /// Substring x_[first, last] in 1-based inclusive coordinates; empty when first > last.
  Sequence slice(std::size_t first, std::size_t last) const;
  Sequence reversed() const;
  Sequence concat(const Sequence& other) const;
  /// Copy with the given 1-based positions removed. Positions must be distinct and in range.
  Sequence erase(std::span<const std::size_t> positions) const;
  /// Copy with `value` inserted so that it becomes symbol number `position` (1-based).
  Sequence insert(std::size_t position, Symbol value) const;
  Sequence with(std::size_t position, Symbol value) const;
  Sequence swapped(std::size_t position) const;

  std::string str() const;

  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend std::strong_ordering operator<=>(const Sequence& a, const Sequence& b) {
    if (auto c = a.symbols_ <=> b.symbols_; c != 0) return c;
    return a.q_ <=> b.q_;
  }

 private:
  std::vector<Symbol> symbols_;
  int q_ = 2;
};

/// Throws UnsupportedAlphabet when q lies outside [2, 16].
void check_alphabet(int q);

/// A word over the integers; houses transform differences and syndrome inputs.
struct IntSequence {
  std::vector<std::int64_t> entries;

  std::size_t size() const noexcept { return entries.size(); }
  std::int64_t operator[](std::size_t i) const noexcept { return entries[i]; }

  /// Comma-separated signed decimals, e.g. "1,0,-1,2". Empty text is the empty word.
  static IntSequence parse(std::string_view text);
  static IntSequence from(const Sequence& x);
  std::string str() const;

  friend bool operator==(const IntSequence&, const IntSequence&) = default;
};

IntSequence operator-(const IntSequence& a, const IntSequence& b);

// Transforms.

/// f(x): prefix sums of the symbols.
IntSequence accumulative(const Sequence& x);
/// d(x): successive differences mod q, with x_0 = 0.
Sequence differential(const Sequence& x);
/// Inverse of `differential`: cumulative sums mod q.
Sequence integrate_differential(const Sequence& d);
/// g(x): prefix sums of d(x).
IntSequence accumulative_differential(const Sequence& x);

/// Minimum number of substrings such that the non-zero entries of each share one sign.
/// Greedy left-to-right scan. Returns 0 for the empty word and 1 for an all-zero word.
std::size_t sign_preserving_number(std::span<const std::int64_t> z);
inline std::size_t sign_preserving_number(const IntSequence& z) { return sign_preserving_number(z.entries); }

/// Exact sum_{i=1}^{n} i^k z_i.
BigInt vt_syndrome(std::span<const std::int64_t> z, unsigned k);
inline BigInt vt_syndrome(const IntSequence& z, unsigned k) { return vt_syndrome(z.entries, k); }

/// Same sum reduced into [0, modulus-1], all intermediate arithmetic mod `modulus`.
std::uint64_t vt_syndrome_mod(std::span<const std::int64_t> z, unsigned k, std::uint64_t modulus);
inline std::uint64_t vt_syndrome_mod(const IntSequence& z, unsigned k, std::uint64_t modulus) {
  return vt_syndrome_mod(z.entries, k, modulus);
}

/// sum_{i=1}^{n} i^k, exact.
BigInt power_sum(std::size_t n, unsigned k);

// Modular helpers shared by the code and codec modules.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const auto s = static_cast<unsigned __int128>(a) + b;
  return static_cast<std::uint64_t>(s % m);
}
std::uint64_t reduce_mod(std::int64_t v, std::uint64_t m);

/// Digit for a symbol value (0-9, a-f).
char symbol_char(Symbol s);

}  // namespace delsub

template <>
struct std::hash<delsub::Sequence> {
  std::size_t operator()(const delsub::Sequence& x) const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(x.q());
    for (auto s : x.symbols()) {
      h ^= s;
      h *= 1099511628211ull;
    }
    h ^= x.size();
    h *= 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};
