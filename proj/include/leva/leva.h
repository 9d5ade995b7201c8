/* leva - constant-time level queries on static rooted trees.
 *
 * A tree is described by a parent array: entry v holds the parent of vertex
 * v, and the root is marked -1. After building an index, level-ancestor,
 * level-descendant, level-successor and descendance queries run in constant
 * time. All handles are opaque; functions return a status code and write
 * results through out-parameters. A query result of LEVA_NONE means "no such
 * vertex" and is not an error.
 */

#ifndef LEVA_H
#define LEVA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define LEVA_NONE (-1)

typedef enum leva_status {
  LEVA_OK = 0,
  LEVA_EINVAL = 1,   /* bad argument (vertex/level out of range, null pointer) */
  LEVA_EPARSE = 2,   /* malformed tree text */
  LEVA_EBADTREE = 3, /* parent array is not a rooted tree */
  LEVA_ENOMEM = 4,
} leva_status;

typedef enum leva_structure {
  LEVA_STRUCT_LINEAR = 0, /* linear-space block structure (default) */
  LEVA_STRUCT_BASIC = 1,  /* quadratic-table structure, larger by a log factor */
} leva_structure;

typedef enum leva_micro_variant {
  LEVA_MICRO_BV = 0,   /* per-block-shape answer matrices (default) */
  LEVA_MICRO_MASK = 1, /* per-position bitmasks with select */
} leva_micro_variant;

typedef struct leva_tree leva_tree;
typedef struct leva_index leva_index;

typedef struct leva_build_options {
  int structure;     /* leva_structure */
  int micro_variant; /* leva_micro_variant */
  int clamp;         /* nonzero: trim the basic tables for nonnegative input */
} leva_build_options;

void leva_build_options_init(leva_build_options* options);

/* Trees. leva_tree_parse consumes the text format: line 1 holds n, line 2
 * holds n whitespace-separated parent entries with the root marked -1. */
leva_status leva_tree_create(const int64_t* parents, size_t n, leva_tree** out);
leva_status leva_tree_parse(const char* text, leva_tree** out);
void leva_tree_free(leva_tree* tree);
size_t leva_tree_order(const leva_tree* tree);
int64_t leva_tree_root(const leva_tree* tree);

/* Index lifecycle. `options` may be NULL for defaults. */
leva_status leva_index_build(const leva_tree* tree, const leva_build_options* options,
                             leva_index** out);
void leva_index_free(leva_index* index);

/* Queries. `*out` receives the answer vertex or LEVA_NONE. */
leva_status leva_level_ancestor(const leva_index* index, int64_t v, int64_t level, int64_t* out);
leva_status leva_level_descendant(const leva_index* index, int64_t v, int64_t level, int64_t* out);
leva_status leva_level_successor(const leva_index* index, int64_t v, int64_t* out);
leva_status leva_is_descendant(const leva_index* index, int64_t u, int64_t v, int* out);
leva_status leva_vertex_level(const leva_index* index, int64_t v, int64_t* out);

typedef struct leva_index_stats {
  uint64_t vertex_count;
  uint64_t payload_words;   /* 8-byte words held by the index */
  uint64_t max_query_hops;  /* highest jump-chain length any query has taken */
} leva_index_stats;

leva_status leva_index_get_stats(const leva_index* index, leva_index_stats* out);

/* Human-readable name of a status code. */
const char* leva_status_str(leva_status status);

/* Detail message for the most recent failing call on this thread. */
const char* leva_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* LEVA_H */
