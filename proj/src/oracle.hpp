#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

// Brute-force reference answers, used by the test suites and the CLI's
// selftest mode. Everything here is a plain scan over the raw inputs and
// shares no code with the indexed structures.

namespace leva::oracle {

// First j > i with a[j] <= x; i itself when x >= a[i] (the same self-return
// convention the indexed query uses).
inline std::optional<std::size_t> find_smaller(std::span<const std::int32_t> a, std::size_t i,
                                               std::int64_t x) {
  if (x >= a[i]) return i;
  for (std::size_t j = i + 1; j < a.size(); ++j) {
    if (a[j] <= x) return j;
  }
  return std::nullopt;
}

// Mirror image: first j > i with a[j] >= x, i itself when a[i] >= x.
inline std::optional<std::size_t> find_greater(std::span<const std::int32_t> a, std::size_t i,
                                               std::int64_t x) {
  if (a[i] >= x) return i;
  for (std::size_t j = i + 1; j < a.size(); ++j) {
    if (a[j] >= x) return j;
  }
  return std::nullopt;
}

// Tree view rebuilt from a parent array alone (assumed valid). Children are
// listed in ascending vertex order, matching the indexed structures' tours.
struct TreeView {
  std::vector<std::int64_t> parent;
  std::vector<std::vector<std::int64_t>> children;
  std::vector<std::int64_t> level;
  std::vector<std::int64_t> order;  // preorder, children visited ascending
  std::int64_t root = -1;

  static TreeView from_parents(std::span<const std::int64_t> parents) {
    TreeView t;
    const std::size_t n = parents.size();
    t.parent.assign(parents.begin(), parents.end());
    t.children.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (parents[v] == -1) {
        t.root = static_cast<std::int64_t>(v);
      } else {
        t.children[static_cast<std::size_t>(parents[v])].push_back(static_cast<std::int64_t>(v));
      }
    }
    t.level.assign(n, -1);
    t.level[static_cast<std::size_t>(t.root)] = 0;
    t.order.reserve(n);
    std::vector<std::int64_t> stack{t.root};
    while (!stack.empty()) {
      const std::int64_t v = stack.back();
      stack.pop_back();
      t.order.push_back(v);
      const auto& kids = t.children[static_cast<std::size_t>(v)];
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
        t.level[static_cast<std::size_t>(*it)] = t.level[static_cast<std::size_t>(v)] + 1;
        stack.push_back(*it);
      }
    }
    return t;
  }

  const std::vector<std::int64_t>& preorder() const { return order; }
};

// Walk parent links until the requested level.
inline std::optional<std::int64_t> level_ancestor(const TreeView& t, std::int64_t v,
                                                  std::int64_t l) {
  if (l < 0 || l > t.level[static_cast<std::size_t>(v)]) return std::nullopt;
  while (t.level[static_cast<std::size_t>(v)] != l) v = t.parent[static_cast<std::size_t>(v)];
  return v;
}

// Preorder scan of v's subtree for the first vertex on the requested level.
inline std::optional<std::int64_t> level_descendant(const TreeView& t, std::int64_t v,
                                                    std::int64_t l) {
  if (l < t.level[static_cast<std::size_t>(v)]) return std::nullopt;
  std::vector<std::int64_t> stack{v};
  while (!stack.empty()) {
    const std::int64_t u = stack.back();
    stack.pop_back();
    if (t.level[static_cast<std::size_t>(u)] == l) return u;
    const auto& kids = t.children[static_cast<std::size_t>(u)];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return std::nullopt;
}

// Full preorder scan for the next vertex sharing v's level.
inline std::optional<std::int64_t> level_successor(const TreeView& t, std::int64_t v) {
  const auto order = t.preorder();
  bool seen = false;
  for (std::int64_t u : order) {
    if (seen && t.level[static_cast<std::size_t>(u)] == t.level[static_cast<std::size_t>(v)]) {
      return u;
    }
    if (u == v) seen = true;
  }
  return std::nullopt;
}

// Walk u's ancestor chain looking for v.
inline bool is_descendant(const TreeView& t, std::int64_t u, std::int64_t v) {
  while (u != -1) {
    if (u == v) return true;
    u = t.parent[static_cast<std::size_t>(u)];
  }
  return false;
}

}  // namespace leva::oracle
