#ifndef LATIN3_H
#define LATIN3_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result code of every fallible call.
typedef enum L3Status {
  L3_STATUS_OK = 0,
  L3_STATUS_INVALID_ARGUMENT = 1,
  L3_STATUS_LIMIT_EXCEEDED = 2,
  L3_STATUS_PARSE_ERROR = 3,
  L3_STATUS_NULL_POINTER = 4,
  L3_STATUS_PANIC = 5,
} L3Status;

// Opaque graph handle.
typedef struct L3Graph L3Graph;

// Opaque polynomial handle.
typedef struct L3Poly L3Poly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Valid until the
// next failing call on the same thread.
const char *l3_last_error(void);

// Frees a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void l3_string_free(char *s);

// Reduced 3 x n Latin rectangles (first row fixed).
//
// # Safety
// `out` must be a valid pointer.
enum L3Status l3_riordan_l3(uint64_t n, char **out);

// # Safety
// `out` must be a valid pointer.
enum L3Status l3_aps_g(uint64_t n, uint64_t lambda, char **out);

// # Safety
// `out` must be a valid pointer.
enum L3Status l3_thm3_g(uint64_t n, uint64_t lambda, char **out);

// Colorings of `G(n, k, l)` with `k + l = n`.
//
// # Safety
// `out` must be a valid pointer.
enum L3Status l3_g_npq_closed(uint64_t n, uint64_t k, uint64_t l, uint64_t lambda, char **out);

// # Safety
// `out` must be a valid pointer.
enum L3Status l3_gen_derangement(uint64_t lambda, uint64_t n, uint64_t t, char **out);

// # Safety
// `out` must be a valid pointer.
enum L3Status l3_count_latin(size_t n,
                             uint64_t lambda,
                             bool fixed_first_row,
                             uint64_t node_budget,
                             char **out);

// # Safety
// `out` must be a valid pointer.
enum L3Status l3_count_injections_forbidden(uint64_t lambda,
                                            uint64_t n,
                                            uint64_t t,
                                            uint64_t node_budget,
                                            char **out);

// `G(n) = K3 □ Kn`.
//
// # Safety
// `out` must be a valid pointer.
enum L3Status l3_graph_build_gn(size_t n, struct L3Graph **out);

// # Safety
// `out` must be a valid pointer.
enum L3Status l3_graph_build_gnpq(size_t n, size_t p, size_t q, struct L3Graph **out);

// Parses the graph text format (vertex count, then `u v` per line).
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be a valid pointer.
enum L3Status l3_graph_parse(const char *text, struct L3Graph **out);

// # Safety
// `g` must be a live handle or NULL (returns 0).
size_t l3_graph_vertex_count(const struct L3Graph *g);

// # Safety
// `g` must be a live handle or NULL (returns 0).
size_t l3_graph_edge_count(const struct L3Graph *g);

// Graph in text format; free with [`l3_string_free`].
//
// # Safety
// `g` must be a live handle; `out` must be a valid pointer.
enum L3Status l3_graph_to_text(const struct L3Graph *g, char **out);

// # Safety
// `g` must come from this library and not have been freed. NULL is ignored.
void l3_graph_free(struct L3Graph *g);

// Chromatic polynomial by deletion–contraction. `vertex_limit == 0` uses the default.
//
// # Safety
// `g` must be a live handle; `out` must be a valid pointer.
enum L3Status l3_chromatic_poly(const struct L3Graph *g, size_t vertex_limit, struct L3Poly **out);

// # Safety
// `g` must be a live handle; `out` must be a valid pointer.
enum L3Status l3_count_colorings_bruteforce(const struct L3Graph *g,
                                            uint64_t lambda,
                                            uint64_t node_budget,
                                            char **out);

// Degree, or -1 for the zero polynomial or a NULL handle.
//
// # Safety
// `p` must be a live handle or NULL.
int64_t l3_poly_degree(const struct L3Poly *p);

// Coefficient of `x^i` as a decimal string (zero above the degree).
//
// # Safety
// `p` must be a live handle; `out` must be a valid pointer.
enum L3Status l3_poly_coeff(const struct L3Poly *p, size_t i, char **out);

// # Safety
// `p` must be a live handle; `out` must be a valid pointer.
enum L3Status l3_poly_eval(const struct L3Poly *p, uint64_t lambda, char **out);

// # Safety
// `p` must come from this library and not have been freed. NULL is ignored.
void l3_poly_free(struct L3Poly *p);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LATIN3_H */
