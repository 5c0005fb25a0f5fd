/* C interface to the boolten library. All tensors are opaque handles owned
 * by the caller and released with bt_tensor_free. Every function returns a
 * bt_status; on failure bt_last_error() describes the problem (per thread).
 * Optional results come back as BT_OK with *out set to NULL. */
#ifndef BOOLTEN_H
#define BOOLTEN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BT_API __declspec(dllexport)
#else
#define BT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bt_tensor bt_tensor;

typedef enum bt_status {
  BT_OK = 0,
  BT_ERR_NULL_ARGUMENT,
  BT_ERR_INVALID_ARGUMENT,
  BT_ERR_SHAPE_MISMATCH,
  BT_ERR_PARSE,
  BT_ERR_RESOURCE,
  BT_ERR_HYPOTHESIS,
  BT_ERR_NOT_REGULAR,
  BT_ERR_INTERNAL
} bt_status;

typedef enum bt_side { BT_SIDE_LEFT = 0, BT_SIDE_RIGHT = 1 } bt_side;

typedef struct bt_properties {
  int symmetric;
  int idempotent;
  int orthogonal;
  int diagonal;
  int permutation;
} bt_properties;

typedef struct bt_axioms {
  int ax1;
  int ax2;
  int ax3;
  int ax4;
} bt_axioms;

typedef struct bt_weight_hypotheses {
  int m_dominates_identity;
  int n_dominates_identity;
  int range_preserved;
  int transpose_range_preserved;
} bt_weight_hypotheses;

BT_API const char* bt_last_error(void);
BT_API const char* bt_status_name(bt_status status);

/* Construction and inspection. */
BT_API bt_status bt_tensor_create(const size_t* row_dims, size_t row_rank,
                                  const size_t* col_dims, size_t col_rank,
                                  const char* bits, bt_tensor** out);
BT_API bt_status bt_tensor_identity(const size_t* dims, size_t rank,
                                    bt_tensor** out);
/* index-th tensor of the shape in ascending bit-string order. */
BT_API bt_status bt_tensor_enumerate(const size_t* row_dims, size_t row_rank,
                                     const size_t* col_dims, size_t col_rank,
                                     uint64_t index, bt_tensor** out);
BT_API bt_status bt_tensor_clone(const bt_tensor* t, bt_tensor** out);
BT_API void bt_tensor_free(bt_tensor* t);

/* Copies up to cap dimensions into dims; *count receives the full length. */
BT_API bt_status bt_tensor_row_dims(const bt_tensor* t, size_t* dims,
                                    size_t cap, size_t* count);
BT_API bt_status bt_tensor_col_dims(const bt_tensor* t, size_t* dims,
                                    size_t cap, size_t* count);
BT_API bt_status bt_tensor_cells(const bt_tensor* t, size_t* out);
/* NUL-terminated bit string, released with bt_string_free. */
BT_API bt_status bt_tensor_bits(const bt_tensor* t, char** out);
BT_API bt_status bt_tensor_equal(const bt_tensor* a, const bt_tensor* b,
                                 int* out);

/* JSON file format. */
BT_API bt_status bt_tensor_from_json(const char* text, bt_tensor** out);
BT_API bt_status bt_tensor_to_json(const bt_tensor* t, char** out);
BT_API bt_status bt_tensor_load(const char* path, bt_tensor** out);
BT_API bt_status bt_tensor_save(const bt_tensor* t, const char* path);
BT_API void bt_string_free(char* s);

/* Algebra. */
BT_API bt_status bt_einsum(const bt_tensor* a, const bt_tensor* b,
                           bt_tensor** out);
BT_API bt_status bt_add(const bt_tensor* a, const bt_tensor* b,
                        bt_tensor** out);
BT_API bt_status bt_transpose(const bt_tensor* a, bt_tensor** out);
BT_API bt_status bt_complement(const bt_tensor* a, bt_tensor** out);
BT_API bt_status bt_closure(const bt_tensor* a, bt_tensor** out);
BT_API bt_status bt_trace(const bt_tensor* a, size_t* out);
BT_API bt_status bt_weight(const bt_tensor* a, size_t* out);
BT_API bt_status bt_leq(const bt_tensor* a, const bt_tensor* b, int* out);
BT_API bt_status bt_classify(const bt_tensor* a, bt_properties* out);

/* Residuation. Right side solves A*X = B, left side X*A = B. */
BT_API bt_status bt_max_solution(const bt_tensor* a, const bt_tensor* b,
                                 bt_side side, bt_tensor** out);
BT_API bt_status bt_solve(const bt_tensor* a, const bt_tensor* b, bt_side side,
                          int* solvable, bt_tensor** max_solution);
/* Whether the range of b lies in the range of a. */
BT_API bt_status bt_range_subset(const bt_tensor* b, const bt_tensor* a,
                                 int* out);

/* Generalized inverses. */
BT_API bt_status bt_check_axioms(const bt_tensor* a, const bt_tensor* x,
                                 bt_axioms* out);
BT_API bt_status bt_is_regular(const bt_tensor* a, int* out);
BT_API bt_status bt_max_g_inverse(const bt_tensor* a, bt_tensor** out);
BT_API bt_status bt_max_reflexive_g_inverse(const bt_tensor* a,
                                            bt_tensor** out);
BT_API bt_status bt_one_three_inverse(const bt_tensor* a, bt_tensor** out);
BT_API bt_status bt_one_four_inverse(const bt_tensor* a, bt_tensor** out);
BT_API bt_status bt_mp_inverse(const bt_tensor* a, bt_tensor** out);
BT_API bt_status bt_inverse(const bt_tensor* a, bt_tensor** out);
BT_API bt_status bt_weight_hypotheses_check(const bt_tensor* a,
                                            const bt_tensor* m,
                                            const bt_tensor* n,
                                            bt_weight_hypotheses* out);
BT_API bt_status bt_check_wmp_axioms(const bt_tensor* a, const bt_tensor* m,
                                     const bt_tensor* n, const bt_tensor* z,
                                     bt_axioms* out);
/* BT_ERR_HYPOTHESIS when a weight hypothesis fails. */
BT_API bt_status bt_wmp_inverse(const bt_tensor* a, const bt_tensor* m,
                                const bt_tensor* n, bt_tensor** out);

/* Decomposition and rank. */
BT_API bt_status bt_verify_space_decomposition(const bt_tensor* a,
                                               const bt_tensor* left,
                                               const bt_tensor* right,
                                               int* out);
/* Both factors NULL when no decomposition exists. */
BT_API bt_status bt_search_space_decomposition(const bt_tensor* a,
                                               const size_t* middle_dims,
                                               size_t middle_rank,
                                               bt_tensor** left,
                                               bt_tensor** right);
BT_API bt_status bt_g_inverse_from_decomposition(const bt_tensor* a,
                                                 const bt_tensor* left,
                                                 const bt_tensor* right,
                                                 bt_tensor** out);
/* Factors are NULL for rank 0. */
BT_API bt_status bt_boolean_rank(const bt_tensor* a, size_t* rank,
                                 bt_tensor** left, bt_tensor** right);
/* *out is 1 (regular) or -1 (inconclusive). */
BT_API bt_status bt_is_regular_by_rank(const bt_tensor* a, int* out);

#ifdef __cplusplus
}
#endif

#endif
