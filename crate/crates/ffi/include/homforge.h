#ifndef HOMFORGE_H
#define HOMFORGE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum HfStatus {
  HF_STATUS_OK = 0,
  HF_STATUS_NULL_POINTER = 1,
  HF_STATUS_INVALID_UTF8 = 2,
  HF_STATUS_PARSE = 3,
  HF_STATUS_DOMAIN = 4,
  HF_STATUS_BUDGET_EXCEEDED = 5,
  HF_STATUS_BUFFER_TOO_SMALL = 6,
  HF_STATUS_PANIC = 7,
} HfStatus;

// Outcome of a homomorphism search.
typedef enum HfOutcome {
  HF_OUTCOME_FOUND = 0,
  HF_OUTCOME_NONE_EXISTS = 1,
  HF_OUTCOME_BUDGET_EXCEEDED = 2,
} HfOutcome;

// Opaque relational structure.
typedef struct HfStructure HfStructure;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call on the same thread.
const char *hf_last_error(void);

// Parses a structure from its JSON form.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum HfStatus hf_structure_from_json(const char *json, struct HfStructure **out);

// Parses a graph in DIMACS `p edge` format.
//
// # Safety
// `dimacs` must be a NUL-terminated string; `out` must be writable.
enum HfStatus hf_structure_from_dimacs(const char *dimacs, struct HfStructure **out);

// Serializes a structure to JSON. Release the string with [`hf_string_free`].
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum HfStatus hf_structure_to_json(const struct HfStructure *s, char **out);

// Number of elements in the universe, or 0 for a null handle.
//
// # Safety
// `s` must be null or a live handle.
size_t hf_structure_len(const struct HfStructure *s);

// Releases a handle. Null is ignored.
//
// # Safety
// `s` must be null or a handle not yet freed.
void hf_structure_free(struct HfStructure *s);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string from this library not yet freed.
void hf_string_free(char *s);

// The complete graph on `k` vertices.
//
// # Safety
// `out` must be writable.
enum HfStatus hf_clique(size_t k, struct HfStructure **out);

// The `k` x `l` grid graph.
//
// # Safety
// `out` must be writable.
enum HfStatus hf_grid(size_t k, size_t l, struct HfStructure **out);

// The `k` x `l` grid with directed horizontal `H` and vertical `V` edges.
//
// # Safety
// `out` must be writable.
enum HfStatus hf_typed_grid(size_t k, size_t l, struct HfStructure **out);

// Searches for a homomorphism `source -> target` within `node_limit` search
// nodes (0 for no limit). When found and `map` is non-null, writes the image
// of each source element; `map_len` must then be at least the source size.
//
// # Safety
// Handles must be live; `outcome` must be writable; `map` must be null or
// point to `map_len` writable slots.
enum HfStatus hf_find_hom(const struct HfStructure *source,
                          const struct HfStructure *target,
                          uint64_t node_limit,
                          enum HfOutcome *outcome,
                          size_t *map,
                          size_t map_len);

// Counts all homomorphisms `source -> target`.
//
// # Safety
// Handles must be live; `out` must be writable.
enum HfStatus hf_count_homs(const struct HfStructure *source,
                            const struct HfStructure *target,
                            uint64_t *out);

// Whether every endomorphism of `s` is a bijection.
//
// # Safety
// `s` must be live; `out` must be writable.
enum HfStatus hf_is_core(const struct HfStructure *s, uint64_t node_limit, bool *out);

// The core of `s` as a new handle.
//
// # Safety
// `s` must be live; `out` must be writable.
enum HfStatus hf_core_of(const struct HfStructure *s,
                         uint64_t node_limit,
                         struct HfStructure **out);

// Exact treewidth of the Gaifman graph; -1 for the empty structure.
//
// # Safety
// `s` must be live; `out` must be writable.
enum HfStatus hf_treewidth_exact(const struct HfStructure *s, int64_t *out);

// Whether the graph `g` contains a `k`-clique.
//
// # Safety
// `g` must be live; `out` must be writable.
enum HfStatus hf_has_k_clique(const struct HfStructure *g, size_t k, bool *out);

// The promise gadget `X` for the typed-grid template `(k, f)` and graph `g`.
//
// # Safety
// `g` must be live; `out` must be writable.
enum HfStatus hf_reduce_pcsp_grid(const struct HfStructure *g,
                                  size_t k,
                                  size_t f,
                                  struct HfStructure **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOMFORGE_H */
