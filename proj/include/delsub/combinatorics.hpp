#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "delsub/seq_core.hpp"

namespace delsub {

/// Calls fn(span of k increasing 1-based indices in [1, n]) in lexicographic order.
/// fn returns false to stop early; the function then returns false too.
template <class Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{1});
  while (true) {
    if (!fn(std::span<const std::size_t>(idx))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - (k - i)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Number of words in Sigma_q^n, saturating at UINT64_MAX.
inline std::uint64_t word_count(int q, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > UINT64_MAX / static_cast<std::uint64_t>(q)) return UINT64_MAX;
    total *= static_cast<std::uint64_t>(q);
  }
  return total;
}

/// The index-th word of Sigma_q^n in lexicographic order (position 1 most significant).
inline Sequence word_at(std::uint64_t index, int q, std::size_t n) {
  std::vector<Symbol> symbols(n);
  for (std::size_t i = n; i-- > 0;) {
    symbols[i] = static_cast<Symbol>(index % static_cast<std::uint64_t>(q));
    index /= static_cast<std::uint64_t>(q);
  }
  return Sequence(std::move(symbols), q);
}

/// Every word of Sigma_q^n in lexicographic order.
inline std::vector<Sequence> all_words(int q, std::size_t n) {
  const auto count = word_count(q, n);
  std::vector<Sequence> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(word_at(i, q, n));
  return out;
}

}  // namespace delsub
