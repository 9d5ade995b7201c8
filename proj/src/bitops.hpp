#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>

// Word-level primitives shared by every query path. All functions are pure
// and constant-time.

namespace leva::bitops {

// Position of the lowest set bit (0-based). In the complete binary tree whose
// nodes 1..n-1 are numbered in symmetric (in-order) order, lsb(i) is the
// height of node i.
inline unsigned lsb(std::uint64_t i) {
  assert(i != 0);
  return static_cast<unsigned>(std::countr_zero(i));
}

// Position of the highest set bit (0-based), i.e. floor(log2(i)).
inline unsigned msb(std::uint64_t i) {
  assert(i != 0);
  return static_cast<unsigned>(std::bit_width(i)) - 1u;
}

// Least common ancestor of nodes j and i (j <= i) of the complete binary tree
// numbered in symmetric order. By convention returns 0 for j <= 0 < i.
//
// The LCA is the unique node of maximal height inside [j, i]; it is obtained
// by clearing the low bits of i below the highest bit where j-1 and i differ.
inline std::uint64_t bt_lca(std::int64_t j, std::uint64_t i) {
  assert(i >= 1);
  assert(j <= static_cast<std::int64_t>(i));
  if (j <= 0) return 0;
  unsigned m = msb(static_cast<std::uint64_t>(j - 1) ^ i);
  return (i >> m) << m;
}

namespace detail {

// For every byte value, the positions of its set bits in ascending order.
inline constexpr auto kSelectInByte = [] {
  std::array<std::array<std::uint8_t, 8>, 256> table{};
  for (unsigned byte = 0; byte < 256; ++byte) {
    unsigned k = 0;
    for (unsigned bit = 0; bit < 8; ++bit) {
      if ((byte >> bit) & 1u) table[byte][k++] = static_cast<std::uint8_t>(bit);
    }
    for (; k < 8; ++k) table[byte][k] = 0xff;
  }
  return table;
}();

}  // namespace detail

// Position (0-based) of the k-th lowest set bit of w (k >= 1), or nullopt if
// fewer than k bits are set. Table-driven over bytes, so constant-time.
inline std::optional<unsigned> select_bit(std::uint64_t w, unsigned k) {
  assert(k >= 1);
  for (unsigned chunk = 0; chunk < 8; ++chunk) {
    unsigned byte = static_cast<unsigned>(w & 0xffu);
    unsigned count = static_cast<unsigned>(std::popcount(byte));
    if (k <= count) return chunk * 8 + detail::kSelectInByte[byte][k - 1];
    k -= count;
    w >>= 8;
  }
  return std::nullopt;
}

// Loop fallback for select_bit; same contract, no table.
inline std::optional<unsigned> select_bit_loop(std::uint64_t w, unsigned k) {
  assert(k >= 1);
  while (w != 0) {
    unsigned p = static_cast<unsigned>(std::countr_zero(w));
    if (--k == 0) return p;
    w &= w - 1;
  }
  return std::nullopt;
}

}  // namespace leva::bitops
