#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace flexalg::detail {

// Pfaffian by expansion along the first remaining row, memoized on the set of
// remaining indices. `entry(i, j)` returns a_ij for i < j.
template <class T, class Entry>
T pfaffian_expand(std::size_t n, const Entry& entry, const T& zero, const T& one) {
  if (n % 2 == 1) return zero;
  std::unordered_map<std::uint32_t, T> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> T {
    if (mask == 0) return one;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int i = std::countr_zero(mask);
    const std::uint32_t rest = mask & ~(1u << i);
    T sum = zero;
    int position = 0;
    for (std::uint32_t scan = rest; scan != 0; scan &= scan - 1, ++position) {
      const int j = std::countr_zero(scan);
      const T& a = entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (a == zero) continue;
      T sub = self(self, rest & ~(1u << j));
      if (position % 2 == 0) sum = sum + a * sub;
      else sum = sum - a * sub;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return rec(rec, n == 0 ? 0u : static_cast<std::uint32_t>((1ull << n) - 1));
}

// Determinant by Laplace expansion along successive rows, memoized on the set
// of columns still available.
template <class T, class Entry>
T determinant_expand(std::size_t n, const Entry& entry, const T& zero, const T& one) {
  std::unordered_map<std::uint32_t, T> memo;
  auto rec = [&](auto&& self, std::uint32_t cols) -> T {
    if (cols == 0) return one;
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(cols));
    T sum = zero;
    int position = 0;
    for (std::uint32_t scan = cols; scan != 0; scan &= scan - 1, ++position) {
      const int j = std::countr_zero(scan);
      const T& a = entry(row, static_cast<std::size_t>(j));
      if (a == zero) continue;
      T sub = self(self, cols & ~(1u << j));
      if (position % 2 == 0) sum = sum + a * sub;
      else sum = sum - a * sub;
    }
    memo.emplace(cols, sum);
    return sum;
  };
  return rec(rec, n == 0 ? 0u : static_cast<std::uint32_t>((1ull << n) - 1));
}

}  // namespace flexalg::detail
