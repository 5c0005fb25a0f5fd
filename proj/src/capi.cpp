#include "boolten.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "boolten/decomposition.hpp"
#include "boolten/error.hpp"
#include "boolten/ginverse.hpp"
#include "boolten/oracle.hpp"
#include "boolten/residuation.hpp"
#include "boolten/tensor_io.hpp"

struct bt_tensor {
  boolten::Tensor value;
};

namespace {

using boolten::ErrorKind;
using boolten::Tensor;

thread_local std::string last_error;

bt_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return BT_ERR_INVALID_ARGUMENT;
    case ErrorKind::shape_mismatch: return BT_ERR_SHAPE_MISMATCH;
    case ErrorKind::parse: return BT_ERR_PARSE;
    case ErrorKind::resource: return BT_ERR_RESOURCE;
    case ErrorKind::hypothesis: return BT_ERR_HYPOTHESIS;
    case ErrorKind::not_regular: return BT_ERR_NOT_REGULAR;
    case ErrorKind::internal: return BT_ERR_INTERNAL;
  }
  return BT_ERR_INTERNAL;
}

template <typename F>
bt_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return BT_OK;
  } catch (const boolten::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BT_ERR_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BT_ERR_INTERNAL;
  }
}

template <typename... P>
bool any_null(P*... p) {
  return ((p == nullptr) || ...);
}

bt_status null_argument() {
  last_error = "null argument";
  return BT_ERR_NULL_ARGUMENT;
}

bt_tensor* wrap(Tensor t) { return new bt_tensor{std::move(t)}; }

bt_tensor* wrap(std::optional<Tensor> t) {
  return t ? wrap(std::move(*t)) : nullptr;
}

boolten::Dims dims_of(const size_t* dims, size_t rank) {
  return rank == 0 ? boolten::Dims{} : boolten::Dims(dims, dims + rank);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bt_status copy_dims(const boolten::Dims& src, size_t* dims, size_t cap,
                    size_t* count) {
  if (count == nullptr || (cap > 0 && dims == nullptr)) return null_argument();
  *count = src.size();
  for (size_t k = 0; k < src.size() && k < cap; ++k) dims[k] = src[k];
  return BT_OK;
}

}  // namespace

extern "C" {

const char* bt_last_error(void) { return last_error.c_str(); }

const char* bt_status_name(bt_status status) {
  switch (status) {
    case BT_OK: return "ok";
    case BT_ERR_NULL_ARGUMENT: return "null argument";
    case BT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BT_ERR_SHAPE_MISMATCH: return "shape mismatch";
    case BT_ERR_PARSE: return "parse error";
    case BT_ERR_RESOURCE: return "resource limit";
    case BT_ERR_HYPOTHESIS: return "hypothesis violated";
    case BT_ERR_NOT_REGULAR: return "not regular";
    case BT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

bt_status bt_tensor_create(const size_t* row_dims, size_t row_rank,
                           const size_t* col_dims, size_t col_rank,
                           const char* bits, bt_tensor** out) {
  if (any_null(bits, out) || (row_rank && !row_dims) || (col_rank && !col_dims))
    return null_argument();
  return guarded([&] {
    *out = wrap(boolten::make_tensor(
        boolten::Shape(dims_of(row_dims, row_rank), dims_of(col_dims, col_rank)),
        bits));
  });
}

bt_status bt_tensor_identity(const size_t* dims, size_t rank, bt_tensor** out) {
  if (out == nullptr || (rank && !dims)) return null_argument();
  return guarded([&] { *out = wrap(boolten::identity(dims_of(dims, rank))); });
}

bt_status bt_tensor_enumerate(const size_t* row_dims, size_t row_rank,
                              const size_t* col_dims, size_t col_rank,
                              uint64_t index, bt_tensor** out) {
  if (out == nullptr || (row_rank && !row_dims) || (col_rank && !col_dims))
    return null_argument();
  return guarded([&] {
    boolten::TensorEnumeration all(boolten::Shape(dims_of(row_dims, row_rank),
                                                  dims_of(col_dims, col_rank)));
    if (index >= all.size()) {
      throw boolten::Error(ErrorKind::invalid_argument,
                           "enumeration index " + std::to_string(index) +
                               " out of range");
    }
    *out = wrap(*boolten::TensorEnumeration::iterator(&all.shape(), index));
  });
}

bt_status bt_tensor_clone(const bt_tensor* t, bt_tensor** out) {
  if (any_null(t, out)) return null_argument();
  return guarded([&] { *out = wrap(t->value); });
}

void bt_tensor_free(bt_tensor* t) { delete t; }

bt_status bt_tensor_row_dims(const bt_tensor* t, size_t* dims, size_t cap,
                             size_t* count) {
  if (t == nullptr) return null_argument();
  return copy_dims(t->value.shape().row_dims(), dims, cap, count);
}

bt_status bt_tensor_col_dims(const bt_tensor* t, size_t* dims, size_t cap,
                             size_t* count) {
  if (t == nullptr) return null_argument();
  return copy_dims(t->value.shape().col_dims(), dims, cap, count);
}

bt_status bt_tensor_cells(const bt_tensor* t, size_t* out) {
  if (any_null(t, out)) return null_argument();
  *out = t->value.shape().cells();
  return BT_OK;
}

bt_status bt_tensor_bits(const bt_tensor* t, char** out) {
  if (any_null(t, out)) return null_argument();
  return guarded([&] { *out = copy_string(t->value.bit_string()); });
}

bt_status bt_tensor_equal(const bt_tensor* a, const bt_tensor* b, int* out) {
  if (any_null(a, b, out)) return null_argument();
  *out = a->value == b->value;
  return BT_OK;
}

bt_status bt_tensor_from_json(const char* text, bt_tensor** out) {
  if (any_null(text, out)) return null_argument();
  return guarded([&] { *out = wrap(boolten::from_json(text)); });
}

bt_status bt_tensor_to_json(const bt_tensor* t, char** out) {
  if (any_null(t, out)) return null_argument();
  return guarded([&] { *out = copy_string(boolten::to_json(t->value)); });
}

bt_status bt_tensor_load(const char* path, bt_tensor** out) {
  if (any_null(path, out)) return null_argument();
  return guarded([&] { *out = wrap(boolten::load_tensor(path)); });
}

bt_status bt_tensor_save(const bt_tensor* t, const char* path) {
  if (any_null(t, path)) return null_argument();
  return guarded([&] { boolten::save_tensor(t->value, path); });
}

void bt_string_free(char* s) { std::free(s); }

bt_status bt_einsum(const bt_tensor* a, const bt_tensor* b, bt_tensor** out) {
  if (any_null(a, b, out)) return null_argument();
  return guarded([&] { *out = wrap(a->value * b->value); });
}

bt_status bt_add(const bt_tensor* a, const bt_tensor* b, bt_tensor** out) {
  if (any_null(a, b, out)) return null_argument();
  return guarded([&] { *out = wrap(a->value + b->value); });
}

bt_status bt_transpose(const bt_tensor* a, bt_tensor** out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] { *out = wrap(boolten::transpose(a->value)); });
}

bt_status bt_complement(const bt_tensor* a, bt_tensor** out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] { *out = wrap(boolten::complement(a->value)); });
}

bt_status bt_closure(const bt_tensor* a, bt_tensor** out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] { *out = wrap(boolten::closure(a->value)); });
}

bt_status bt_trace(const bt_tensor* a, size_t* out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] { *out = boolten::trace(a->value); });
}

bt_status bt_weight(const bt_tensor* a, size_t* out) {
  if (any_null(a, out)) return null_argument();
  *out = a->value.weight();
  return BT_OK;
}

bt_status bt_leq(const bt_tensor* a, const bt_tensor* b, int* out) {
  if (any_null(a, b, out)) return null_argument();
  return guarded([&] { *out = boolten::leq(a->value, b->value); });
}

bt_status bt_classify(const bt_tensor* a, bt_properties* out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] {
    const boolten::PropertyFlags f = boolten::classify(a->value);
    *out = {f.symmetric, f.idempotent, f.orthogonal, f.diagonal, f.permutation};
  });
}

bt_status bt_max_solution(const bt_tensor* a, const bt_tensor* b, bt_side side,
                          bt_tensor** out) {
  if (any_null(a, b, out)) return null_argument();
  return guarded([&] {
    *out = wrap(side == BT_SIDE_LEFT
                    ? boolten::max_left_solution(a->value, b->value)
                    : boolten::max_right_solution(a->value, b->value));
  });
}

bt_status bt_solve(const bt_tensor* a, const bt_tensor* b, bt_side side,
                   int* solvable, bt_tensor** max_solution) {
  if (any_null(a, b, solvable)) return null_argument();
  return guarded([&] {
    boolten::SolveReport r = side == BT_SIDE_LEFT
                                 ? boolten::solve_left(a->value, b->value)
                                 : boolten::solve_right(a->value, b->value);
    *solvable = r.solvable;
    if (max_solution != nullptr) *max_solution = wrap(std::move(r.max_solution));
  });
}

bt_status bt_range_subset(const bt_tensor* b, const bt_tensor* a, int* out) {
  if (any_null(a, b, out)) return null_argument();
  return guarded([&] { *out = boolten::range_subset(b->value, a->value); });
}

bt_status bt_check_axioms(const bt_tensor* a, const bt_tensor* x,
                          bt_axioms* out) {
  if (any_null(a, x, out)) return null_argument();
  return guarded([&] {
    const boolten::AxiomReport r = boolten::check_g_axioms(a->value, x->value);
    *out = {r.ax1, r.ax2, r.ax3, r.ax4};
  });
}

bt_status bt_is_regular(const bt_tensor* a, int* out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] { *out = boolten::is_regular(a->value); });
}

bt_status bt_max_g_inverse(const bt_tensor* a, bt_tensor** out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] { *out = wrap(boolten::max_g_inverse(a->value)); });
}

bt_status bt_max_reflexive_g_inverse(const bt_tensor* a, bt_tensor** out) {
  if (any_null(a, out)) return null_argument();
  return guarded(
      [&] { *out = wrap(boolten::max_reflexive_g_inverse(a->value)); });
}

bt_status bt_one_three_inverse(const bt_tensor* a, bt_tensor** out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] { *out = wrap(boolten::one_three_inverse(a->value)); });
}

bt_status bt_one_four_inverse(const bt_tensor* a, bt_tensor** out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] { *out = wrap(boolten::one_four_inverse(a->value)); });
}

bt_status bt_mp_inverse(const bt_tensor* a, bt_tensor** out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] { *out = wrap(boolten::mp_inverse(a->value)); });
}

bt_status bt_inverse(const bt_tensor* a, bt_tensor** out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] { *out = wrap(boolten::inverse(a->value)); });
}

bt_status bt_weight_hypotheses_check(const bt_tensor* a, const bt_tensor* m,
                                     const bt_tensor* n,
                                     bt_weight_hypotheses* out) {
  if (any_null(a, m, n, out)) return null_argument();
  return guarded([&] {
    const boolten::WeightHypotheses h =
        boolten::check_weight_hypotheses(a->value, {m->value, n->value});
    *out = {h.m_dominates_identity, h.n_dominates_identity, h.range_preserved,
            h.transpose_range_preserved};
  });
}

bt_status bt_check_wmp_axioms(const bt_tensor* a, const bt_tensor* m,
                              const bt_tensor* n, const bt_tensor* z,
                              bt_axioms* out) {
  if (any_null(a, m, n, z, out)) return null_argument();
  return guarded([&] {
    const boolten::AxiomReport r =
        boolten::check_wmp_axioms(a->value, {m->value, n->value}, z->value);
    *out = {r.ax1, r.ax2, r.ax3, r.ax4};
  });
}

bt_status bt_wmp_inverse(const bt_tensor* a, const bt_tensor* m,
                         const bt_tensor* n, bt_tensor** out) {
  if (any_null(a, m, n, out)) return null_argument();
  return guarded([&] {
    *out = wrap(boolten::wmp_inverse(a->value, {m->value, n->value}));
  });
}

bt_status bt_verify_space_decomposition(const bt_tensor* a,
                                        const bt_tensor* left,
                                        const bt_tensor* right, int* out) {
  if (any_null(a, left, right, out)) return null_argument();
  return guarded([&] {
    *out = boolten::verify_space_decomposition(a->value, left->value,
                                               right->value);
  });
}

bt_status bt_search_space_decomposition(const bt_tensor* a,
                                        const size_t* middle_dims,
                                        size_t middle_rank, bt_tensor** left,
                                        bt_tensor** right) {
  if (any_null(a, left, right) || (middle_rank && !middle_dims))
    return null_argument();
  return guarded([&] {
    auto d = boolten::search_space_decomposition(
        a->value, dims_of(middle_dims, middle_rank));
    *left = d ? wrap(std::move(d->left)) : nullptr;
    *right = d ? wrap(std::move(d->right)) : nullptr;
  });
}

bt_status bt_g_inverse_from_decomposition(const bt_tensor* a,
                                          const bt_tensor* left,
                                          const bt_tensor* right,
                                          bt_tensor** out) {
  if (any_null(a, left, right, out)) return null_argument();
  return guarded([&] {
    const boolten::SpaceDecomposition d{left->value, right->value,
                                        left->value.shape().col_dims()};
    *out = wrap(boolten::g_inverse_from_decomposition(a->value, d));
  });
}

bt_status bt_boolean_rank(const bt_tensor* a, size_t* rank, bt_tensor** left,
                          bt_tensor** right) {
  if (any_null(a, rank)) return null_argument();
  return guarded([&] {
    boolten::RankCertificate c = boolten::boolean_rank(a->value);
    *rank = c.rank;
    if (left != nullptr) *left = c.witness ? wrap(c.witness->left) : nullptr;
    if (right != nullptr) *right = c.witness ? wrap(c.witness->right) : nullptr;
  });
}

bt_status bt_is_regular_by_rank(const bt_tensor* a, int* out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] {
    const auto r = boolten::is_regular_by_rank(a->value);
    *out = r ? (*r ? 1 : 0) : -1;
  });
}

}  // extern "C"
