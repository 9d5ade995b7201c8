#include "tree.hpp"

#include <cassert>
#include <charconv>
#include <limits>

#include "error.hpp"

namespace leva {

namespace {
constexpr std::int64_t kMaxOrder = std::int64_t{1} << 31;
}  // namespace

Tree build_tree(std::span<const std::int64_t> parents) {
  const std::size_t n = parents.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "tree must have at least one vertex");
  if (static_cast<std::int64_t>(n) > kMaxOrder) {
    throw Error(ErrorCode::kInvalidArgument, "tree too large");
  }

  Tree t;
  t.n_ = static_cast<vertex_t>(n);
  t.parent_.resize(n);
  std::int64_t root = -1;
  for (std::size_t v = 0; v < n; ++v) {
    const std::int64_t p = parents[v];
    if (p == -1) {
      if (root != -1) {
        throw Error(ErrorCode::kMultipleRoots,
                    "multiple roots: vertex " + std::to_string(v) + " and vertex " +
                        std::to_string(root),
                    static_cast<std::int64_t>(v));
      }
      root = static_cast<std::int64_t>(v);
      t.parent_[v] = Tree::kNoParent;
    } else if (p < 0 || p >= static_cast<std::int64_t>(n)) {
      throw Error(ErrorCode::kParentOutOfRange,
                  "vertex " + std::to_string(v) + ": parent " + std::to_string(p) +
                      " out of range",
                  static_cast<std::int64_t>(v));
    } else {
      t.parent_[v] = static_cast<vertex_t>(p);
    }
  }
  if (root == -1) throw Error(ErrorCode::kNoRoot, "no root (no -1 entry)");
  t.root_ = static_cast<vertex_t>(root);

  // Walk parent chains, stamping vertices as settled once they reach the
  // root. A chain that re-enters itself is a cycle.
  std::vector<std::uint8_t> state(n, 0);  // 0 new, 1 on current chain, 2 settled
  state[t.root_] = 2;
  std::vector<vertex_t> chain;
  for (vertex_t v = 0; v < t.n_; ++v) {
    if (state[v] != 0) continue;
    chain.clear();
    vertex_t u = v;
    while (state[u] == 0) {
      state[u] = 1;
      chain.push_back(u);
      u = t.parent_[u];
    }
    if (state[u] == 1) {
      throw Error(ErrorCode::kCycleDetected,
                  "cycle through vertex " + std::to_string(u), static_cast<std::int64_t>(u));
    }
    for (vertex_t w : chain) state[w] = 2;
  }

  // CSR adjacency; visiting v in ascending order keeps children sorted.
  t.child_off_.assign(n + 1, 0);
  for (vertex_t v = 0; v < t.n_; ++v) {
    if (v != t.root_) ++t.child_off_[t.parent_[v] + 1];
  }
  for (std::size_t v = 0; v < n; ++v) t.child_off_[v + 1] += t.child_off_[v];
  t.child_flat_.resize(n - 1);
  std::vector<std::size_t> cursor(t.child_off_.begin(), t.child_off_.end() - 1);
  for (vertex_t v = 0; v < t.n_; ++v) {
    if (v != t.root_) t.child_flat_[cursor[t.parent_[v]]++] = v;
  }
  return t;
}

std::optional<Tree> try_build_tree(std::span<const std::int64_t> parents) {
  // Cheap pre-checks so that bulk enumeration of candidate arrays does not
  // pay exception cost for the common invalid case.
  const std::size_t n = parents.size();
  if (n == 0) return std::nullopt;
  int roots = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::int64_t p = parents[v];
    if (p == -1) {
      ++roots;
    } else if (p < 0 || p >= static_cast<std::int64_t>(n)) {
      return std::nullopt;
    }
  }
  if (roots != 1) return std::nullopt;
  try {
    return build_tree(parents);
  } catch (const Error&) {
    return std::nullopt;
  }
}

Tree parse_tree(std::string_view text) {
  // Split into lines, keeping 1-based numbers for error reporting.
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
    if (end == text.size()) break;
  }

  const auto parse_int = [](std::string_view token, std::int64_t& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
  };
  const auto tokenize = [](std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    return tokens;
  };

  if (lines.empty() || tokenize(lines[0]).empty()) {
    throw Error(ErrorCode::kParseError, "line 1: expected vertex count", 1);
  }
  const auto head = tokenize(lines[0]);
  std::int64_t n = 0;
  if (head.size() != 1 || !parse_int(head[0], n) || n < 1 || n > kMaxOrder) {
    throw Error(ErrorCode::kParseError, "line 1: expected a positive vertex count", 1);
  }
  if (lines.size() < 2) {
    throw Error(ErrorCode::kParseError, "line 2: expected " + std::to_string(n) + " parent entries",
                2);
  }
  const auto tokens = tokenize(lines[1]);
  if (static_cast<std::int64_t>(tokens.size()) != n) {
    throw Error(ErrorCode::kParseError,
                "line 2: expected " + std::to_string(n) + " parent entries, found " +
                    std::to_string(tokens.size()),
                2);
  }
  std::vector<std::int64_t> parents(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < parents.size(); ++i) {
    if (!parse_int(tokens[i], parents[i])) {
      throw Error(ErrorCode::kParseError,
                  "line 2: entry " + std::to_string(i) + " is not an integer", 2);
    }
  }
  for (std::size_t ln = 2; ln < lines.size(); ++ln) {
    if (!tokenize(lines[ln]).empty()) {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(ln + 1) + ": unexpected content",
                  static_cast<std::int64_t>(ln + 1));
    }
  }
  return build_tree(parents);
}

EulerTour euler_tour(const Tree& tree) {
  const std::size_t n = tree.order();
  EulerTour tour;
  tour.E.reserve(2 * n - 1);
  tour.L.reserve(2 * n - 1);
  tour.R.assign(n, 0);
  tour.F.assign(n, 0);

  const auto visit = [&](vertex_t v, value_t level, bool first) {
    const index_t pos = static_cast<index_t>(tour.E.size());
    tour.E.push_back(v);
    tour.L.push_back(level);
    tour.R[v] = pos;
    if (first) tour.F[v] = pos;
  };

  // Iterative DFS; path-shaped trees can be deep enough to overflow the
  // machine stack otherwise.
  struct Frame {
    vertex_t v;
    std::size_t next_child;
  };
  std::vector<Frame> stack;
  stack.push_back({tree.root(), 0});
  visit(tree.root(), 0, true);
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto kids = tree.children(top.v);
    if (top.next_child < kids.size()) {
      const vertex_t child = kids[top.next_child++];
      stack.push_back({child, 0});
      visit(child, static_cast<value_t>(stack.size()) - 1, true);
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        visit(stack.back().v, static_cast<value_t>(stack.size()) - 1, false);
      }
    }
  }
  assert(tour.E.size() == 2 * n - 1);
  return tour;
}

}  // namespace leva
