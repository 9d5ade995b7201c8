#include "fs_greater.hpp"

#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "test_util.hpp"
#include "treegen.hpp"

using namespace leva;

TEST_CASE("worked examples") {
  auto g = GreaterFs::build(std::vector<value_t>{0, 1, 0}, MicroVariant::kBv);
  CHECK(g.query(0, 1) == 1);

  auto down = GreaterFs::build(std::vector<value_t>{0, -1, -2}, MicroVariant::kBv);
  CHECK(down.query(0, 1) == std::nullopt);

  // Star tour levels: 0 1 0 1 0.
  auto star = GreaterFs::build(std::vector<value_t>{0, 1, 0, 1, 0}, MicroVariant::kMask);
  CHECK(star.query(1, 1) == 1);  // already at the target: self-return
  CHECK(star.query(2, 1) == 3);
}

TEST_CASE("self-return convention") {
  gen::SplitMix64 rng(0x9f);
  const auto a = testutil::random_pm_array(300, rng);
  auto g = GreaterFs::build(a, MicroVariant::kBv);
  for (index_t i = 0; i < a.size(); ++i) {
    CHECK(g.query(i, a[i]) == i);
    CHECK(g.query(i, a[i] - 2) == i);
  }
}

TEST_CASE("equals the negated find-smaller and the scan oracle") {
  gen::SplitMix64 rng(0x6f2);
  long cases = 0;
  while (cases < 100000) {
    const unsigned len = 1 + static_cast<unsigned>(rng.below(1024));
    const auto a = testutil::random_pm_array(len, rng);
    std::vector<value_t> negated(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) negated[i] = -a[i];

    auto g = GreaterFs::build(a, MicroVariant::kBv);
    auto fs_neg = LinearFs::build(negated, MicroVariant::kBv);
    const value_t lo = *std::min_element(a.begin(), a.end());
    const value_t hi = *std::max_element(a.begin(), a.end());
    for (int q = 0; q < 120; ++q) {
      const index_t i = static_cast<index_t>(rng.below(len));
      const value_t x =
          lo - 2 + static_cast<value_t>(rng.below(static_cast<std::uint64_t>(hi - lo) + 5));
      const auto want = oracle::find_greater(a, i, x);
      const auto got = g.query(i, x);
      CAPTURE(i);
      CAPTURE(x);
      REQUIRE(testutil::same_answer(got, want));
      REQUIRE(testutil::same_answer(fs_neg.query(i, -x), want));
      ++cases;
    }
  }
}
