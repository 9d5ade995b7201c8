#include "bitops.hpp"

#include <vector>

#include "doctest.h"
#include "treegen.hpp"

using namespace leva;

namespace {

unsigned lsb_loop(std::uint64_t i) {
  unsigned r = 0;
  while ((i & 1) == 0) {
    i >>= 1;
    ++r;
  }
  return r;
}

unsigned msb_loop(std::uint64_t i) {
  unsigned r = 0;
  while (i >>= 1) ++r;
  return r;
}

// Explicit complete binary tree over 1..2^h-1 in symmetric order, with parent
// pointers, for checking bt_lca against a plain ancestor walk.
struct ExplicitBt {
  std::vector<std::uint64_t> parent;

  explicit ExplicitBt(unsigned h) : parent((std::uint64_t{1} << h), 0) {
    build(1, (std::uint64_t{1} << h) - 1, 0);
  }

  void build(std::uint64_t lo, std::uint64_t hi, std::uint64_t up) {
    if (lo > hi) return;
    const std::uint64_t mid = (lo + hi) / 2;
    parent[mid] = up;
    if (lo < hi) {
      build(lo, mid - 1, mid);
      build(mid + 1, hi, mid);
    }
  }

  std::uint64_t lca(std::uint64_t a, std::uint64_t b) const {
    std::vector<bool> seen(parent.size(), false);
    for (std::uint64_t x = a; x != 0; x = parent[x]) seen[x] = true;
    for (std::uint64_t x = b; x != 0; x = parent[x]) {
      if (seen[x]) return x;
    }
    return 0;
  }
};

}  // namespace

TEST_CASE("lsb matches the shift loop") {
  CHECK(bitops::lsb(1) == 0);
  CHECK(bitops::lsb(4) == 2);
  CHECK(bitops::lsb(12) == 2);
  for (std::uint64_t i = 1; i <= (1u << 16); ++i) {
    CAPTURE(i);
    REQUIRE(bitops::lsb(i) == lsb_loop(i));
  }
}

TEST_CASE("2^lsb(i) divides i and 2^(lsb(i)+1) does not") {
  for (std::uint64_t i = 1; i <= (1u << 16); ++i) {
    const std::uint64_t p = std::uint64_t{1} << bitops::lsb(i);
    REQUIRE(i % p == 0);
    REQUIRE(i % (2 * p) != 0);
  }
}

TEST_CASE("msb is floor(log2)") {
  CHECK(bitops::msb(1) == 0);
  CHECK(bitops::msb(9) == 3);
  CHECK(bitops::msb(16) == 4);
  for (std::uint64_t i = 1; i <= (1u << 16); ++i) {
    REQUIRE(bitops::msb(i) == msb_loop(i));
  }
}

TEST_CASE("bt_lca worked examples") {
  CHECK(bitops::bt_lca(6, 9) == 8);
  CHECK(bitops::bt_lca(-3, 5) == 0);
  CHECK(bitops::bt_lca(2, 3) == 2);
  CHECK(bitops::bt_lca(0, 7) == 0);
  CHECK(bitops::bt_lca(5, 5) == 5);
}

TEST_CASE("bt_lca agrees with an explicit parent-pointer tree") {
  ExplicitBt bt(10);
  for (std::uint64_t i = 1; i < 1024; ++i) {
    for (std::uint64_t j = 1; j <= i; ++j) {
      CAPTURE(j);
      CAPTURE(i);
      REQUIRE(bitops::bt_lca(static_cast<std::int64_t>(j), i) == bt.lca(j, i));
    }
  }
}

TEST_CASE("bt_lca covering inequalities") {
  // For k = bt_lca(j, i): i-j+1 <= 2^(1+lsb(k)) and i-k+1 <= 2^lsb(k).
  for (std::uint64_t i = 1; i < 1024; ++i) {
    for (std::uint64_t j = 1; j < i; ++j) {
      const std::uint64_t k = bitops::bt_lca(static_cast<std::int64_t>(j), i);
      REQUIRE(i - j + 1 <= (std::uint64_t{2} << bitops::lsb(k)));
      REQUIRE(i - k + 1 <= (std::uint64_t{1} << bitops::lsb(k)));
    }
  }
}

TEST_CASE("select_bit examples") {
  CHECK(bitops::select_bit(0b1011, 1) == 0);
  CHECK(bitops::select_bit(0b1011, 3) == 3);
  CHECK(bitops::select_bit(0b0100, 2) == std::nullopt);
  CHECK(bitops::select_bit(0, 1) == std::nullopt);
  CHECK(bitops::select_bit(~std::uint64_t{0}, 64) == 63);
}

TEST_CASE("select_bit table and loop paths agree with enumeration") {
  gen::SplitMix64 rng(0xb17b17);
  for (int round = 0; round < 100000; ++round) {
    const std::uint64_t w = rng.next() >> rng.below(64);
    const unsigned k = 1 + static_cast<unsigned>(rng.below(66));
    std::optional<unsigned> want;
    unsigned seen = 0;
    for (unsigned bit = 0; bit < 64 && !want; ++bit) {
      if ((w >> bit) & 1) {
        if (++seen == k) want = bit;
      }
    }
    CAPTURE(w);
    CAPTURE(k);
    REQUIRE(bitops::select_bit(w, k) == want);
    REQUIRE(bitops::select_bit_loop(w, k) == want);
  }
}
