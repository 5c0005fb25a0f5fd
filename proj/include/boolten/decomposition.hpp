#pragma once

#include <cstddef>
#include <optional>

#include "boolten/tensor.hpp"

namespace boolten {

/// A = left * right with R(A) = R(left) and R(A^T) = R(right^T).
struct SpaceDecomposition {
  Tensor left;   // rows x middle
  Tensor right;  // middle x cols
  Dims middle_dims;
};

/// Checks the three defining conditions of a space decomposition.
bool verify_space_decomposition(const Tensor& a, const Tensor& left,
                                const Tensor& right);

inline constexpr std::size_t kDefaultMiddleCap = 4;

/// Exhaustive search for a space decomposition through the given middle
/// group. Candidates are tried in descending bit-string order, so the result
/// is deterministic. Throws ErrorKind::resource when the middle product
/// exceeds `middle_cap` or a factor exceeds 24 cells.
std::optional<SpaceDecomposition> search_space_decomposition(
    const Tensor& a, const Dims& middle_dims,
    std::size_t middle_cap = kDefaultMiddleCap);

/// g-inverses of both factors induced by a g-inverse X of A:
/// left^(1) = right * X and right^(1) = X * left.
struct FactorInverses {
  Tensor left_inverse;
  Tensor right_inverse;
};

/// Factor g-inverses induced by max_g_inverse(A); these satisfy
/// left^(1) * A = right and A * right^(1) = left.
FactorInverses factor_g_inverses(const Tensor& a, const SpaceDecomposition& d);

/// right^(1) * left^(1) for the induced factor inverses, a reflexive
/// g-inverse of A. Throws ErrorKind::invalid_argument if `d` is not a space
/// decomposition of `a`.
Tensor g_inverse_from_decomposition(const Tensor& a,
                                    const SpaceDecomposition& d);

struct Factorization {
  Tensor left;   // (row_dims, [rank])
  Tensor right;  // ([rank], col_dims)
};

struct RankCertificate {
  std::size_t rank = 0;
  std::optional<Factorization> witness;  // absent iff rank == 0
};

struct RankOptions {
  std::size_t max_rows = 8;
  std::size_t max_cols = 8;
};

/// Exact Boolean rank of the matrix flattening: the fewest all-ones
/// rectangles covering every 1. Throws ErrorKind::resource beyond the caps.
RankCertificate boolean_rank(const Tensor& a, const RankOptions& options = {});

/// True when rank <= 1 (all nonzero rows coincide).
bool has_rank_at_most_one(const Tensor& a);

/// Sufficient regularity tests: weight <= 1 or rank <= 1. nullopt means
/// inconclusive; fall back to is_regular.
std::optional<bool> is_regular_by_rank(const Tensor& a);

}  // namespace boolten
