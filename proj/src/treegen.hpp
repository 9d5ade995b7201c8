#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Deterministic tree generation for the CLI and the test suites. The random
// shape uses splitmix64 so that fixtures stay reproducible across platforms
// and languages.

namespace leva::gen {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

enum class Shape { kPath, kStar, kCaterpillar, kBalanced, kRandom };

inline std::optional<Shape> parse_shape(std::string_view name) {
  if (name == "path") return Shape::kPath;
  if (name == "star") return Shape::kStar;
  if (name == "caterpillar") return Shape::kCaterpillar;
  if (name == "balanced") return Shape::kBalanced;
  if (name == "random") return Shape::kRandom;
  return std::nullopt;
}

inline const char* shape_name(Shape s) {
  switch (s) {
    case Shape::kPath: return "path";
    case Shape::kStar: return "star";
    case Shape::kCaterpillar: return "caterpillar";
    case Shape::kBalanced: return "balanced";
    case Shape::kRandom: return "random";
  }
  return "?";
}

// Parent array for the requested shape; deterministic for fixed arguments.
// The random shape draws the parent of vertex v uniformly from [0, v).
inline std::vector<std::int64_t> make_parents(Shape shape, std::size_t n, std::uint64_t seed) {
  std::vector<std::int64_t> parents(n, -1);
  SplitMix64 rng(seed);
  for (std::size_t v = 1; v < n; ++v) {
    switch (shape) {
      case Shape::kPath:
        parents[v] = static_cast<std::int64_t>(v) - 1;
        break;
      case Shape::kStar:
        parents[v] = 0;
        break;
      case Shape::kCaterpillar:
        // Even vertices form the spine, odd ones hang off their spine
        // neighbor.
        parents[v] = static_cast<std::int64_t>(v) - (v % 2 == 0 ? 2 : 1);
        break;
      case Shape::kBalanced:
        parents[v] = static_cast<std::int64_t>((v - 1) / 2);
        break;
      case Shape::kRandom:
        parents[v] = static_cast<std::int64_t>(rng.below(v));
        break;
    }
  }
  return parents;
}

// The tree text format: vertex count line, then the parent entries.
inline std::string format_tree(const std::vector<std::int64_t>& parents) {
  std::string out = std::to_string(parents.size());
  out.push_back('\n');
  for (std::size_t v = 0; v < parents.size(); ++v) {
    if (v > 0) out.push_back(' ');
    out += std::to_string(parents[v]);
  }
  out.push_back('\n');
  return out;
}

}  // namespace leva::gen
