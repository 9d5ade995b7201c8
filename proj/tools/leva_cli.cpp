// Command-line front end for the leva shared library. Index work goes
// through the public C API; tree generation and the selftest oracles are
// header-only helpers with no dependency on the indexed structures.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leva/leva.h"
#include "oracle.hpp"
#include "treegen.hpp"

namespace {

struct TreeHandle {
  leva_tree* ptr = nullptr;
  ~TreeHandle() { leva_tree_free(ptr); }
};

struct IndexHandle {
  leva_index* ptr = nullptr;
  ~IndexHandle() { leva_index_free(ptr); }
};

[[noreturn]] void die(const std::string& message) {
  std::cerr << "leva: " << message << "\n";
  std::exit(1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

leva_build_options make_options(const std::string& variant, const std::string& structure,
                                bool clamp) {
  leva_build_options opt;
  leva_build_options_init(&opt);
  if (variant == "mask") {
    opt.micro_variant = LEVA_MICRO_MASK;
  } else if (variant != "bv") {
    die("unknown micro variant '" + variant + "' (expected bv or mask)");
  }
  if (structure == "basic") {
    opt.structure = LEVA_STRUCT_BASIC;
  } else if (structure != "linear") {
    die("unknown structure '" + structure + "' (expected linear or basic)");
  }
  opt.clamp = clamp ? 1 : 0;
  return opt;
}

void build_index(const std::string& tree_path, const leva_build_options& opt, TreeHandle& tree,
                 IndexHandle& index) {
  const std::string text = read_file(tree_path);
  leva_status st = leva_tree_parse(text.c_str(), &tree.ptr);
  if (st != LEVA_OK) die(tree_path + ": " + leva_last_error());
  st = leva_index_build(tree.ptr, &opt, &index.ptr);
  if (st != LEVA_OK) die(tree_path + ": " + leva_last_error());
}

// One query line: ("LA" v l) | ("LD" v l) | ("LS" v).
struct QueryRecord {
  char kind;  // 'A', 'D' or 'S'
  std::int64_t v = 0;
  std::int64_t l = 0;
};

std::optional<QueryRecord> parse_query_line(const std::string& line, std::string& why) {
  std::istringstream in(line);
  std::string kind;
  if (!(in >> kind)) return std::nullopt;  // blank line
  QueryRecord q;
  if (kind == "LA") {
    q.kind = 'A';
  } else if (kind == "LD") {
    q.kind = 'D';
  } else if (kind == "LS") {
    q.kind = 'S';
  } else {
    why = "unknown query kind '" + kind + "'";
    return std::nullopt;
  }
  if (!(in >> q.v) || q.v < 0) {
    why = "expected a non-negative vertex";
    return std::nullopt;
  }
  if (q.kind != 'S') {
    if (!(in >> q.l) || q.l < 0) {
      why = "expected a non-negative level";
      return std::nullopt;
    }
  }
  std::string extra;
  if (in >> extra) {
    why = "trailing content '" + extra + "'";
    return std::nullopt;
  }
  return q;
}

int run_queries(const IndexHandle& index, std::istream& in, const std::string& source,
                std::ostream& out) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string why;
    const auto q = parse_query_line(line, why);
    if (!q) {
      if (why.empty()) continue;  // blank line
      die(source + ": line " + std::to_string(line_no) + ": " + why);
    }
    std::int64_t answer = LEVA_NONE;
    leva_status st = LEVA_OK;
    switch (q->kind) {
      case 'A': st = leva_level_ancestor(index.ptr, q->v, q->l, &answer); break;
      case 'D': st = leva_level_descendant(index.ptr, q->v, q->l, &answer); break;
      case 'S': st = leva_level_successor(index.ptr, q->v, &answer); break;
    }
    if (st != LEVA_OK) {
      die(source + ": line " + std::to_string(line_no) + ": " + leva_last_error());
    }
    if (answer == LEVA_NONE) {
      out << "-\n";
    } else {
      out << answer << "\n";
    }
  }
  return 0;
}

int cmd_query(const std::string& tree_path, const std::string& query_path,
              const std::string& variant, const std::string& structure, bool clamp) {
  TreeHandle tree;
  IndexHandle index;
  build_index(tree_path, make_options(variant, structure, clamp), tree, index);
  std::ios::sync_with_stdio(false);
  if (query_path.empty() || query_path == "-") {
    return run_queries(index, std::cin, "<stdin>", std::cout);
  }
  std::ifstream in(query_path);
  if (!in) die(query_path + ": cannot open");
  return run_queries(index, in, query_path, std::cout);
}

int cmd_gen(const std::string& shape_name, std::size_t n, std::uint64_t seed,
            const std::string& out_path) {
  const auto shape = leva::gen::parse_shape(shape_name);
  if (!shape) die("unknown shape '" + shape_name + "'");
  if (n < 1) die("n must be at least 1");
  const std::string text = leva::gen::format_tree(leva::gen::make_parents(*shape, n, seed));
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) die(out_path + ": cannot open for writing");
    out << text;
  }
  return 0;
}

// Selftest: compare every level query against the brute-force oracles, via
// the public C API, over exhaustive small trees plus seeded shapes.
struct SelftestStats {
  long trees = 0;
  long queries = 0;
};

bool selftest_tree(const std::vector<std::int64_t>& parents, const leva_build_options& opt,
                   bool inject_fault, SelftestStats& stats) {
  TreeHandle tree;
  IndexHandle index;
  if (leva_tree_create(parents.data(), parents.size(), &tree.ptr) != LEVA_OK) {
    die(std::string("selftest: tree rejected: ") + leva_last_error());
  }
  if (leva_index_build(tree.ptr, &opt, &index.ptr) != LEVA_OK) {
    die(std::string("selftest: index build failed: ") + leva_last_error());
  }
  const auto view = leva::oracle::TreeView::from_parents(parents);
  const auto n = static_cast<std::int64_t>(parents.size());
  ++stats.trees;

  const auto report = [&](const char* kind, std::int64_t v, std::int64_t l, std::int64_t got,
                          std::int64_t want) {
    std::ostringstream msg;
    msg << "mismatch: tree [";
    for (std::size_t i = 0; i < parents.size(); ++i) {
      if (i) msg << ' ';
      msg << parents[i];
    }
    msg << "] query " << kind << " v=" << v;
    if (l >= 0) msg << " l=" << l;
    msg << " got=" << got << " want=" << want;
    std::cerr << msg.str() << "\n";
  };
  const auto pack = [](std::optional<std::int64_t> v) { return v ? *v : LEVA_NONE; };

  bool first_fault = inject_fault;
  for (std::int64_t v = 0; v < n; ++v) {
    for (std::int64_t l = 0; l <= n; ++l) {
      std::int64_t got = LEVA_NONE;
      if (leva_level_ancestor(index.ptr, v, l, &got) != LEVA_OK) die("selftest: LA failed");
      std::int64_t want = pack(leva::oracle::level_ancestor(view, v, l));
      if (first_fault) {
        want ^= 1;  // deliberately corrupt one expectation
        first_fault = false;
      }
      ++stats.queries;
      if (got != want) {
        report("LA", v, l, got, want);
        return false;
      }
      if (leva_level_descendant(index.ptr, v, l, &got) != LEVA_OK) die("selftest: LD failed");
      want = pack(leva::oracle::level_descendant(view, v, l));
      ++stats.queries;
      if (got != want) {
        report("LD", v, l, got, want);
        return false;
      }
    }
    std::int64_t got = LEVA_NONE;
    if (leva_level_successor(index.ptr, v, &got) != LEVA_OK) die("selftest: LS failed");
    const std::int64_t want = pack(leva::oracle::level_successor(view, v));
    ++stats.queries;
    if (got != want) {
      report("LS", v, -1, got, want);
      return false;
    }
    for (std::int64_t u = 0; u < n; ++u) {
      int flag = 0;
      if (leva_is_descendant(index.ptr, u, v, &flag) != LEVA_OK) die("selftest: desc failed");
      ++stats.queries;
      if ((flag != 0) != leva::oracle::is_descendant(view, u, v)) {
        report("DESC", u, v, flag, -2);
        return false;
      }
    }
  }
  return true;
}

int cmd_selftest(std::size_t n_max, std::uint64_t seeds, bool inject_fault) {
  SelftestStats stats;
  leva_build_options opts[4];
  for (int i = 0; i < 4; ++i) {
    leva_build_options_init(&opts[i]);
    opts[i].micro_variant = (i % 2 == 0) ? LEVA_MICRO_BV : LEVA_MICRO_MASK;
    opts[i].structure = (i < 2) ? LEVA_STRUCT_LINEAR : LEVA_STRUCT_BASIC;
  }
  int opt_cursor = 0;

  // Exhaustive parent arrays for small orders, ascending so that any failure
  // is minimal. A small n-max asks for the whole space up to that order; a
  // larger one spends the budget on sampled shapes instead.
  const std::size_t exhaustive_max = n_max <= 8 ? n_max : 7;
  for (std::size_t n = 1; n <= exhaustive_max; ++n) {
    std::vector<std::int64_t> parents(n);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= n + 1;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      int roots = 0;
      bool plausible = true;
      for (std::size_t v = 0; v < n; ++v) {
        const std::int64_t p = static_cast<std::int64_t>(c % (n + 1)) - 1;
        parents[v] = p;
        c /= n + 1;
        if (p == -1) ++roots;
        if (p == static_cast<std::int64_t>(v)) plausible = false;
      }
      if (roots != 1 || !plausible) continue;
      leva_tree* probe = nullptr;
      if (leva_tree_create(parents.data(), n, &probe) != LEVA_OK) continue;
      leva_tree_free(probe);
      if (!selftest_tree(parents, opts[opt_cursor++ % 4], inject_fault, stats)) {
        std::cerr << "selftest: FAILED after " << stats.trees << " trees\n";
        return 2;
      }
      inject_fault = false;  // at most one injected fault
    }
  }

  // Seeded shapes up to n_max.
  const leva::gen::Shape shapes[] = {leva::gen::Shape::kPath, leva::gen::Shape::kStar,
                                     leva::gen::Shape::kCaterpillar, leva::gen::Shape::kBalanced,
                                     leva::gen::Shape::kRandom};
  for (const auto shape : shapes) {
    for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
      leva::gen::SplitMix64 rng(seed * 0x9e37 + static_cast<std::uint64_t>(shape));
      const std::size_t n = 1 + rng.below(std::max<std::size_t>(n_max, 1));
      const auto parents = leva::gen::make_parents(shape, n, seed);
      if (!selftest_tree(parents, opts[opt_cursor++ % 4], inject_fault, stats)) {
        std::cerr << "selftest: FAILED\n";
        return 2;
      }
      inject_fault = false;
    }
  }

  std::cout << "OK: trees=" << stats.trees << " queries=" << stats.queries << " mismatches=0\n";
  return 0;
}

int cmd_bench(const std::string& shape_name, const std::string& n_list,
              const std::string& variant, const std::string& structures, std::uint64_t seed,
              unsigned reps) {
  const auto shape = leva::gen::parse_shape(shape_name);
  if (!shape) die("unknown shape '" + shape_name + "'");
  std::vector<std::size_t> sizes;
  std::stringstream ss(n_list);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    sizes.push_back(static_cast<std::size_t>(std::stoull(token)));
  }
  if (sizes.empty()) die("bench needs at least one size");

  std::vector<std::string> structure_list;
  if (structures == "both") {
    structure_list = {"linear", "basic"};
  } else {
    structure_list = {structures};
  }

  using Clock = std::chrono::steady_clock;
  std::cout << "n\tstructure\tvariant\tbuild_ms\tbytes\tquery_ns\tmax_hops\n";
  for (const std::size_t n : sizes) {
    const auto parents = leva::gen::make_parents(*shape, n, seed);
    TreeHandle tree;
    if (leva_tree_create(parents.data(), parents.size(), &tree.ptr) != LEVA_OK) {
      die(std::string("bench: ") + leva_last_error());
    }
    for (const auto& structure : structure_list) {
      const auto opt = make_options(variant, structure, false);
      double build_ms_total = 0;
      double query_ns_total = 0;
      std::uint64_t bytes = 0;
      std::uint64_t max_hops = 0;
      const std::size_t query_count = 100000;
      for (unsigned rep = 0; rep < reps; ++rep) {
        IndexHandle index;
        const auto t0 = Clock::now();
        if (leva_index_build(tree.ptr, &opt, &index.ptr) != LEVA_OK) {
          die(std::string("bench: ") + leva_last_error());
        }
        const auto t1 = Clock::now();
        build_ms_total += std::chrono::duration<double, std::milli>(t1 - t0).count();

        leva::gen::SplitMix64 rng(seed ^ (rep + 1));
        std::int64_t sink = 0;
        const auto q0 = Clock::now();
        for (std::size_t q = 0; q < query_count; ++q) {
          const std::int64_t v = static_cast<std::int64_t>(rng.below(n));
          std::int64_t lv = 0;
          leva_vertex_level(index.ptr, v, &lv);
          std::int64_t answer = LEVA_NONE;
          switch (q % 3) {
            case 0:
              leva_level_ancestor(index.ptr, v, lv == 0 ? 0 : static_cast<std::int64_t>(rng.below(lv + 1)), &answer);
              break;
            case 1:
              leva_level_descendant(index.ptr, v, lv + static_cast<std::int64_t>(rng.below(4)), &answer);
              break;
            case 2:
              leva_level_successor(index.ptr, v, &answer);
              break;
          }
          sink ^= answer;
        }
        const auto q1 = Clock::now();
        query_ns_total += std::chrono::duration<double, std::nano>(q1 - q0).count() /
                          static_cast<double>(query_count);
        leva_index_stats stats{};
        leva_index_get_stats(index.ptr, &stats);
        bytes = stats.payload_words * 8;
        max_hops = std::max(max_hops, stats.max_query_hops);
        if (sink == 42) std::cerr << "";  // keep the loop observable
      }
      std::printf("%zu\t%s\t%s\t%.3f\t%llu\t%.1f\t%llu\n", n, structure.c_str(), variant.c_str(),
                  build_ms_total / reps, static_cast<unsigned long long>(bytes),
                  query_ns_total / reps, static_cast<unsigned long long>(max_hops));
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"level queries on static rooted trees"};
  app.require_subcommand(1);

  std::string tree_path, query_path, variant = "bv", structure = "linear";
  bool clamp = false;
  auto* query = app.add_subcommand("query", "answer LA/LD/LS queries from a tree file");
  query->add_option("tree", tree_path, "tree file")->required();
  query->add_option("queries", query_path, "query file (default: stdin)");
  query->add_option("--variant", variant, "micro variant: bv or mask");
  query->add_option("--structure", structure, "index structure: linear or basic");
  query->add_flag("--clamp", clamp, "trim the basic tables for nonnegative input");

  std::string shape = "random", out_path;
  std::size_t gen_n = 1;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "emit a tree file");
  gen->add_option("--shape", shape, "path|star|caterpillar|balanced|random")->required();
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("-o,--output", out_path, "output file (default: stdout)");

  std::size_t n_max = 64;
  std::uint64_t seeds = 5;
  bool inject_fault = false;
  auto* selftest = app.add_subcommand("selftest", "compare the index against brute-force oracles");
  selftest->add_option("--n-max", n_max, "largest tree order to test");
  selftest->add_option("--seeds", seeds, "seeds per shape");
  selftest->add_flag("--inject-fault", inject_fault,
                     "corrupt one expected answer to prove mismatches are caught");

  std::string bench_ns = "1024,4096,16384", bench_structure = "both";
  unsigned reps = 3;
  auto* bench = app.add_subcommand("bench", "measure build time, size and query time");
  bench->add_option("--shape", shape, "tree shape");
  bench->add_option("--n", bench_ns, "comma-separated vertex counts");
  bench->add_option("--variant", variant, "micro variant: bv or mask");
  bench->add_option("--structure", bench_structure, "linear, basic or both");
  bench->add_option("--seed", seed, "random seed");
  bench->add_option("--reps", reps, "repetitions per row");

  CLI11_PARSE(app, argc, argv);

  if (query->parsed()) return cmd_query(tree_path, query_path, variant, structure, clamp);
  if (gen->parsed()) return cmd_gen(shape, gen_n, seed, out_path);
  if (selftest->parsed()) return cmd_selftest(n_max, seeds, inject_fault);
  if (bench->parsed()) return cmd_bench(shape, bench_ns, variant, bench_structure, seed, reps);
  return 1;
}
