#include "leva/leva.h"

#include <new>
#include <span>
#include <string>

#include "error.hpp"
#include "levels.hpp"
#include "tree.hpp"

struct leva_tree {
  leva::Tree tree;
};

struct leva_index {
  leva::LevelIndex index;
};

namespace {

thread_local std::string g_last_error;

leva_status fail(leva_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

leva_status fail_from(const leva::Error& e) {
  switch (e.code()) {
    case leva::ErrorCode::kParseError:
      return fail(LEVA_EPARSE, e.what());
    case leva::ErrorCode::kMultipleRoots:
    case leva::ErrorCode::kNoRoot:
    case leva::ErrorCode::kCycleDetected:
    case leva::ErrorCode::kParentOutOfRange:
      return fail(LEVA_EBADTREE, e.what());
    default:
      return fail(LEVA_EINVAL, e.what());
  }
}

template <class Fn>
leva_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const leva::Error& e) {
    return fail_from(e);
  } catch (const std::bad_alloc&) {
    return fail(LEVA_ENOMEM, "out of memory");
  }
}

bool valid_vertex(const leva_index* ix, int64_t v) {
  return v >= 0 && v < static_cast<int64_t>(ix->index.order());
}

int64_t pack(std::optional<leva::vertex_t> answer) {
  return answer ? static_cast<int64_t>(*answer) : LEVA_NONE;
}

}  // namespace

extern "C" {

void leva_build_options_init(leva_build_options* options) {
  if (!options) return;
  options->structure = LEVA_STRUCT_LINEAR;
  options->micro_variant = LEVA_MICRO_BV;
  options->clamp = 0;
}

leva_status leva_tree_create(const int64_t* parents, size_t n, leva_tree** out) {
  if (!parents || !out || n == 0) return fail(LEVA_EINVAL, "null or empty argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = new leva_tree{leva::build_tree(std::span<const int64_t>(parents, n))};
    *out = handle;
    return LEVA_OK;
  });
}

leva_status leva_tree_parse(const char* text, leva_tree** out) {
  if (!text || !out) return fail(LEVA_EINVAL, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = new leva_tree{leva::parse_tree(text)};
    *out = handle;
    return LEVA_OK;
  });
}

void leva_tree_free(leva_tree* tree) { delete tree; }

size_t leva_tree_order(const leva_tree* tree) { return tree ? tree->tree.order() : 0; }

int64_t leva_tree_root(const leva_tree* tree) {
  return tree ? static_cast<int64_t>(tree->tree.root()) : LEVA_NONE;
}

leva_status leva_index_build(const leva_tree* tree, const leva_build_options* options,
                             leva_index** out) {
  if (!tree || !out) return fail(LEVA_EINVAL, "null argument");
  *out = nullptr;
  leva_build_options defaults;
  leva_build_options_init(&defaults);
  if (!options) options = &defaults;
  if (options->structure != LEVA_STRUCT_LINEAR && options->structure != LEVA_STRUCT_BASIC) {
    return fail(LEVA_EINVAL, "unknown structure");
  }
  if (options->micro_variant != LEVA_MICRO_BV && options->micro_variant != LEVA_MICRO_MASK) {
    return fail(LEVA_EINVAL, "unknown micro variant");
  }
  return guarded([&] {
    leva::BuildOptions opts;
    opts.backend = options->structure == LEVA_STRUCT_BASIC ? leva::FsBackend::kBasic
                                                           : leva::FsBackend::kLinear;
    opts.variant = options->micro_variant == LEVA_MICRO_MASK ? leva::MicroVariant::kMask
                                                             : leva::MicroVariant::kBv;
    opts.clamp = options->clamp != 0;
    auto handle = new leva_index{leva::LevelIndex::build(tree->tree, opts)};
    *out = handle;
    return LEVA_OK;
  });
}

void leva_index_free(leva_index* index) { delete index; }

leva_status leva_level_ancestor(const leva_index* index, int64_t v, int64_t level, int64_t* out) {
  if (!index || !out) return fail(LEVA_EINVAL, "null argument");
  if (!valid_vertex(index, v)) return fail(LEVA_EINVAL, "vertex out of range");
  if (level < 0) return fail(LEVA_EINVAL, "negative level");
  *out = level > static_cast<int64_t>(index->index.level(static_cast<leva::vertex_t>(v)))
             ? LEVA_NONE
             : pack(index->index.level_ancestor(static_cast<leva::vertex_t>(v),
                                                static_cast<leva::vertex_t>(level)));
  return LEVA_OK;
}

leva_status leva_level_descendant(const leva_index* index, int64_t v, int64_t level, int64_t* out) {
  if (!index || !out) return fail(LEVA_EINVAL, "null argument");
  if (!valid_vertex(index, v)) return fail(LEVA_EINVAL, "vertex out of range");
  if (level < 0) return fail(LEVA_EINVAL, "negative level");
  // No vertex can sit at or beyond level n, so large targets resolve to NONE
  // without touching the narrower internal level type.
  if (level < static_cast<int64_t>(index->index.level(static_cast<leva::vertex_t>(v))) ||
      level >= static_cast<int64_t>(index->index.order())) {
    *out = LEVA_NONE;
  } else {
    *out = pack(index->index.level_descendant(static_cast<leva::vertex_t>(v),
                                              static_cast<leva::vertex_t>(level)));
  }
  return LEVA_OK;
}

leva_status leva_level_successor(const leva_index* index, int64_t v, int64_t* out) {
  if (!index || !out) return fail(LEVA_EINVAL, "null argument");
  if (!valid_vertex(index, v)) return fail(LEVA_EINVAL, "vertex out of range");
  *out = pack(index->index.level_successor(static_cast<leva::vertex_t>(v)));
  return LEVA_OK;
}

leva_status leva_is_descendant(const leva_index* index, int64_t u, int64_t v, int* out) {
  if (!index || !out) return fail(LEVA_EINVAL, "null argument");
  if (!valid_vertex(index, u) || !valid_vertex(index, v)) {
    return fail(LEVA_EINVAL, "vertex out of range");
  }
  *out = index->index.is_descendant(static_cast<leva::vertex_t>(u), static_cast<leva::vertex_t>(v))
             ? 1
             : 0;
  return LEVA_OK;
}

leva_status leva_vertex_level(const leva_index* index, int64_t v, int64_t* out) {
  if (!index || !out) return fail(LEVA_EINVAL, "null argument");
  if (!valid_vertex(index, v)) return fail(LEVA_EINVAL, "vertex out of range");
  *out = static_cast<int64_t>(index->index.level(static_cast<leva::vertex_t>(v)));
  return LEVA_OK;
}

leva_status leva_index_get_stats(const leva_index* index, leva_index_stats* out) {
  if (!index || !out) return fail(LEVA_EINVAL, "null argument");
  out->vertex_count = index->index.order();
  out->payload_words = index->index.word_count();
  out->max_query_hops = index->index.max_query_hops();
  return LEVA_OK;
}

const char* leva_status_str(leva_status status) {
  switch (status) {
    case LEVA_OK: return "ok";
    case LEVA_EINVAL: return "invalid argument";
    case LEVA_EPARSE: return "parse error";
    case LEVA_EBADTREE: return "invalid tree";
    case LEVA_ENOMEM: return "out of memory";
  }
  return "unknown";
}

const char* leva_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
