#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "fs_basic.hpp"
#include "fs_greater.hpp"
#include "fs_linear.hpp"
#include "tree.hpp"
#include "types.hpp"

namespace leva {

// Which Find-Smaller engine backs the index. The linear one is the default;
// the quadratic-table one exists for comparison (its tables grow by a log
// factor) and answers identically.
enum class FsBackend { kLinear, kBasic };

struct BuildOptions {
  FsBackend backend = FsBackend::kLinear;
  MicroVariant variant = MicroVariant::kBv;
  bool clamp = false;       // trim the quadratic tables for nonnegative input
  unsigned mask_window = 0; // widen the mask variant's reach; 0 = block length
};

// Level queries on a static rooted tree: level ancestor, level descendant,
// level successor and descendance tests, all constant-time after linear
// preprocessing of the Euler tour.
class LevelIndex {
 public:
  static LevelIndex build(const Tree& tree, const BuildOptions& options = {});

  // The ancestor of v at level `level`, v itself when level == level(v),
  // nullopt when level > level(v).
  std::optional<vertex_t> level_ancestor(vertex_t v, vertex_t level) const;

  // The preorder-first descendant of v at level `level`, v itself when
  // level == level(v), nullopt when v has none.
  std::optional<vertex_t> level_descendant(vertex_t v, vertex_t level) const;

  // The next vertex after v in preorder having level(v), nullopt when v is
  // the last vertex of its level.
  std::optional<vertex_t> level_successor(vertex_t v) const;

  // Whether u lies in the subtree of v (every vertex descends from itself).
  bool is_descendant(vertex_t u, vertex_t v) const {
    return tour_.F[v] <= tour_.F[u] && tour_.F[u] <= tour_.R[v];
  }

  vertex_t level(vertex_t v) const { return levels_[v]; }
  vertex_t order() const { return static_cast<vertex_t>(levels_.size()); }
  const EulerTour& tour() const { return tour_; }

  std::size_t word_count() const;
  std::uint32_t max_query_hops() const;

 private:
  LevelIndex() = default;

  // First tour position at or after `from` whose level is <= / >= x.
  std::optional<index_t> find_level_at_most(index_t from, value_t x) const;
  std::optional<index_t> find_level_at_least(index_t from, value_t x) const;

  struct LinearEngines {
    LinearFs fs;
    GreaterFs fg;
  };
  struct BasicEngines {
    BasicFs fs;
    BasicFs fg_negated;  // over the negated level array
  };

  EulerTour tour_;
  std::vector<vertex_t> levels_;
  std::variant<std::monostate, LinearEngines, BasicEngines> engines_;
};

}  // namespace leva
