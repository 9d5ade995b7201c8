#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "types.hpp"

namespace leva {

// Rooted tree over vertices 0..n-1, stored as a validated parent array plus
// a CSR child adjacency. Children are kept in ascending vertex order so that
// tours are deterministic.
class Tree {
 public:
  static constexpr vertex_t kNoParent = static_cast<vertex_t>(-1);

  vertex_t order() const { return n_; }
  vertex_t root() const { return root_; }
  vertex_t parent(vertex_t v) const { return parent_[v]; }
  std::span<const vertex_t> children(vertex_t v) const {
    return {child_flat_.data() + child_off_[v], child_off_[v + 1] - child_off_[v]};
  }

 private:
  friend Tree build_tree(std::span<const std::int64_t> parents);

  vertex_t n_ = 0;
  vertex_t root_ = 0;
  std::vector<vertex_t> parent_;
  std::vector<std::size_t> child_off_;
  std::vector<vertex_t> child_flat_;
};

// Validates a parent array (root marked -1) and builds the tree.
// Throws Error with kMultipleRoots, kNoRoot, kCycleDetected or
// kParentOutOfRange, naming the offending vertex.
Tree build_tree(std::span<const std::int64_t> parents);

// Non-throwing variant; returns nullopt on invalid input.
std::optional<Tree> try_build_tree(std::span<const std::int64_t> parents);

// Text format: line 1 holds n, line 2 holds n whitespace-separated parent
// entries with the root marked -1. Throws Error(kParseError) whose detail is
// the 1-based line number.
Tree parse_tree(std::string_view text);

// Euler tour of a rooted tree: the DFS walk that traverses every edge in
// both directions, listing 2n-1 vertex visits.
struct EulerTour {
  std::vector<vertex_t> E;   // visited vertex per tour position
  std::vector<value_t> L;    // level per tour position, root at 0
  std::vector<index_t> R;    // last occurrence of each vertex
  std::vector<index_t> F;    // first occurrence of each vertex

  std::size_t word_count() const {
    return ((E.size() + L.size() + R.size() + F.size()) * 4 + 7) / 8;
  }
};

EulerTour euler_tour(const Tree& tree);

}  // namespace leva
