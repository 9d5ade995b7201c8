#include "levels.hpp"

#include <cassert>

namespace leva {

LevelIndex LevelIndex::build(const Tree& tree, const BuildOptions& options) {
  LevelIndex ix;
  ix.tour_ = euler_tour(tree);
  ix.levels_.resize(tree.order());
  for (vertex_t v = 0; v < tree.order(); ++v) {
    ix.levels_[v] = static_cast<vertex_t>(ix.tour_.L[ix.tour_.F[v]]);
  }

  std::vector<value_t> levels(ix.tour_.L);
  if (options.backend == FsBackend::kLinear) {
    auto fs = LinearFs::build(std::move(levels), options.variant, options.mask_window);
    auto fg = GreaterFs::build(ix.tour_.L, options.variant, options.mask_window);
    ix.engines_.emplace<LinearEngines>(LinearEngines{std::move(fs), std::move(fg)});
  } else {
    auto fs = BasicFs::build(std::move(levels), options.clamp);
    std::vector<value_t> negated(ix.tour_.L.size());
    for (std::size_t i = 0; i < negated.size(); ++i) negated[i] = -ix.tour_.L[i];
    auto fg = BasicFs::build(std::move(negated), options.clamp);
    ix.engines_.emplace<BasicEngines>(BasicEngines{std::move(fs), std::move(fg)});
  }
  return ix;
}

std::optional<index_t> LevelIndex::find_level_at_most(index_t from, value_t x) const {
  if (const auto* lin = std::get_if<LinearEngines>(&engines_)) return lin->fs.query(from, x);
  return std::get<BasicEngines>(engines_).fs.query(from, x);
}

std::optional<index_t> LevelIndex::find_level_at_least(index_t from, value_t x) const {
  if (const auto* lin = std::get_if<LinearEngines>(&engines_)) return lin->fg.query(from, x);
  return std::get<BasicEngines>(engines_).fg_negated.query(from, -x);
}

std::optional<vertex_t> LevelIndex::level_ancestor(vertex_t v, vertex_t target) const {
  assert(v < order());
  if (target == levels_[v]) return v;
  if (target > levels_[v]) return std::nullopt;
  // The first tour position after the last occurrence of v at a level <= the
  // target; the target is strictly below level(v), so the query never
  // self-returns.
  auto p = find_level_at_most(tour_.R[v], static_cast<value_t>(target));
  assert(p.has_value());  // the root closes the tour at level 0
  return tour_.E[*p];
}

std::optional<vertex_t> LevelIndex::level_descendant(vertex_t v, vertex_t target) const {
  assert(v < order());
  if (target == levels_[v]) return v;
  if (target < levels_[v]) return std::nullopt;
  // Search strictly after the first occurrence of v. Starting one past it
  // sidesteps the query's self-return; position F[v]+1 itself is still
  // inspected through that query's own self-return case.
  const index_t start = tour_.F[v] + 1;
  if (start >= tour_.L.size()) return std::nullopt;
  auto p = find_level_at_least(start, static_cast<value_t>(target));
  if (!p) return std::nullopt;
  const vertex_t u = tour_.E[*p];
  // A +-1 walk reaches the target level exactly, and inside v's subtree the
  // first such visit is a preorder-first arrival.
  assert(levels_[u] == target);
  return is_descendant(u, v) ? std::optional<vertex_t>(u) : std::nullopt;
}

std::optional<vertex_t> LevelIndex::level_successor(vertex_t v) const {
  assert(v < order());
  // The position after R[v] holds the parent of v (one level up), so issuing
  // the query there cannot self-return and scans strictly past v's subtree.
  const index_t start = tour_.R[v] + 1;
  if (start >= tour_.L.size()) return std::nullopt;
  auto p = find_level_at_least(start, static_cast<value_t>(levels_[v]));
  if (!p) return std::nullopt;
  assert(levels_[tour_.E[*p]] == levels_[v]);
  return tour_.E[*p];
}

std::size_t LevelIndex::word_count() const {
  std::size_t engine_words = 0;
  if (const auto* lin = std::get_if<LinearEngines>(&engines_)) {
    engine_words = lin->fs.word_count() + lin->fg.word_count();
  } else if (const auto* bas = std::get_if<BasicEngines>(&engines_)) {
    engine_words = bas->fs.word_count() + bas->fg_negated.word_count();
  }
  return tour_.word_count() + (levels_.size() * sizeof(vertex_t) + 7) / 8 + engine_words;
}

std::uint32_t LevelIndex::max_query_hops() const {
  if (const auto* lin = std::get_if<LinearEngines>(&engines_)) {
    return std::max(lin->fs.max_hops(), lin->fg.inner().max_hops());
  }
  return 0;
}

}  // namespace leva
