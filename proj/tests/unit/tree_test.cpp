#include "tree.hpp"

#include <map>
#include <vector>

#include "doctest.h"
#include "error.hpp"
#include "test_util.hpp"
#include "treegen.hpp"

using namespace leva;

TEST_CASE("single-vertex tree") {
  const std::vector<std::int64_t> p = {-1};
  auto t = build_tree(p);
  CHECK(t.order() == 1);
  CHECK(t.root() == 0);
  auto tour = euler_tour(t);
  CHECK(tour.E == std::vector<vertex_t>{0});
  CHECK(tour.L == std::vector<value_t>{0});
  CHECK(tour.R == std::vector<index_t>{0});
  CHECK(tour.F == std::vector<index_t>{0});
}

TEST_CASE("star adjacency and tour") {
  const std::vector<std::int64_t> p = {-1, 0, 0};
  auto t = build_tree(p);
  CHECK(t.children(0).size() == 2);
  CHECK(t.children(0)[0] == 1);
  CHECK(t.children(0)[1] == 2);
  auto tour = euler_tour(t);
  CHECK(tour.E == std::vector<vertex_t>{0, 1, 0, 2, 0});
  CHECK(tour.L == std::vector<value_t>{0, 1, 0, 1, 0});
  CHECK(tour.R == std::vector<index_t>{4, 1, 3});
  CHECK(tour.F == std::vector<index_t>{0, 1, 3});
}

TEST_CASE("two-vertex path tour") {
  auto t = build_tree(std::vector<std::int64_t>{-1, 0});
  auto tour = euler_tour(t);
  CHECK(tour.E == std::vector<vertex_t>{0, 1, 0});
  CHECK(tour.L == std::vector<value_t>{0, 1, 0});
  CHECK(tour.R == std::vector<index_t>{2, 1});
  CHECK(tour.F == std::vector<index_t>{0, 1});
}

TEST_CASE("validation errors name the offending vertex") {
  CHECK_THROWS_AS(build_tree(std::vector<std::int64_t>{-1, -1}), Error);
  try {
    build_tree(std::vector<std::int64_t>{-1, -1});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMultipleRoots);
    CHECK(e.detail() == 1);
  }
  try {
    build_tree(std::vector<std::int64_t>{0, 1});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoRoot);
  }
  try {
    build_tree(std::vector<std::int64_t>{-1, 2, 1});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCycleDetected);
  }
  try {
    build_tree(std::vector<std::int64_t>{-1, 5});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParentOutOfRange);
    CHECK(e.detail() == 1);
  }
  CHECK(try_build_tree(std::vector<std::int64_t>{-1, 2, 1}) == std::nullopt);
  CHECK(try_build_tree(std::vector<std::int64_t>{-1, 0}).has_value());
}

TEST_CASE("tour level steps are +-1 and occurrences match degrees") {
  for (auto shape : {gen::Shape::kPath, gen::Shape::kStar, gen::Shape::kCaterpillar,
                     gen::Shape::kBalanced, gen::Shape::kRandom}) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const std::size_t n = 1 + gen::SplitMix64(seed * 977).below(1000);
      auto t = build_tree(gen::make_parents(shape, n, seed));
      auto tour = euler_tour(t);
      REQUIRE(tour.E.size() == 2 * n - 1);
      REQUIRE(tour.L.front() == 0);
      REQUIRE(tour.L.back() == 0);
      REQUIRE(tour.E.front() == t.root());
      REQUIRE(tour.E.back() == t.root());
      for (std::size_t i = 0; i + 1 < tour.L.size(); ++i) {
        const auto d = tour.L[i + 1] - tour.L[i];
        REQUIRE((d == 1 || d == -1));
      }
      std::vector<std::size_t> occurrences(n, 0);
      for (auto v : tour.E) ++occurrences[v];
      for (vertex_t v = 0; v < t.order(); ++v) {
        REQUIRE(occurrences[v] == t.children(v).size() + 1);
        REQUIRE(tour.E[tour.R[v]] == v);
        REQUIRE(tour.E[tour.F[v]] == v);
        REQUIRE(tour.F[v] <= tour.R[v]);
      }
    }
  }
}

TEST_CASE("one larger random tour keeps the +-1 property") {
  const std::size_t n = 100000;
  auto t = build_tree(gen::make_parents(gen::Shape::kRandom, n, 7));
  auto tour = euler_tour(t);
  for (std::size_t i = 0; i + 1 < tour.L.size(); ++i) {
    const auto d = tour.L[i + 1] - tour.L[i];
    REQUIRE((d == 1 || d == -1));
  }
}

TEST_CASE("deep path does not overflow the machine stack") {
  const std::size_t n = 1000000;
  auto t = build_tree(gen::make_parents(gen::Shape::kPath, n, 0));
  auto tour = euler_tour(t);
  CHECK(tour.L[n - 1] == static_cast<value_t>(n - 1));
  CHECK(tour.R[0] == 2 * n - 2);
}

TEST_CASE("parse_tree accepts the text format") {
  auto t = parse_tree("3\n-1 0 0\n");
  CHECK(t.order() == 3);
  CHECK(t.root() == 0);
  CHECK(parse_tree("1\n-1").order() == 1);
}

TEST_CASE("parse_tree reports the offending line") {
  const auto line_of = [](std::string_view text) -> std::int64_t {
    try {
      parse_tree(text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParseError);
      return e.detail();
    }
    return -1;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("zebra\n-1") == 1);
  CHECK(line_of("0\n") == 1);
  CHECK(line_of("3\n-1 0\n") == 2);
  CHECK(line_of("2\n-1 x\n") == 2);
  CHECK(line_of("2\n-1 0\nextra\n") == 3);
  CHECK_THROWS_AS(parse_tree("2\n0 1\n"), Error);  // valid syntax, no root
}
