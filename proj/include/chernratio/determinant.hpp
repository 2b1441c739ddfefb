#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace chernratio {

/// Determinant of a q x q matrix over a commutative ring, by Laplace
/// expansion along successive rows with memoized minors. A minor is keyed by
/// the set of columns already consumed, so the cost is O(q 2^q) ring
/// multiplications rather than q!.
///
/// `entry(i, j)` returns the ring element in row i, column j; `one` is the
/// multiplicative unit, used for the empty minor. Ring needs +, -, *.
template <typename Ring, typename EntryFn>
Ring laplace_determinant(std::size_t q, EntryFn&& entry, const Ring& one) {
  if (q > 30) throw std::invalid_argument("laplace_determinant: matrix too large");
  std::unordered_map<std::uint32_t, Ring> memo;
  const std::uint32_t full = (q == 32) ? ~0U : ((1U << q) - 1U);

  // minor(mask) = determinant of rows popcount(mask).. with columns not in mask
  auto minor = [&](auto&& self, std::uint32_t used) -> Ring {
    if (used == full) return one;
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcount(used));
    Ring acc = one - one;
    int position = 0;
    for (std::size_t col = 0; col < q; ++col) {
      if (used & (1U << col)) continue;
      Ring e = entry(row, col);
      Ring term = e * self(self, used | (1U << col));
      if (position % 2 == 0) acc = acc + term;
      else acc = acc - term;
      ++position;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(minor, 0U);
}

}  // namespace chernratio
