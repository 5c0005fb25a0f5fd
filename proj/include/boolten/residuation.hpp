#pragma once

#include <optional>

#include "boolten/tensor.hpp"

namespace boolten {

/// Largest X with X * A <= B: (B^C * A^T)^C.
Tensor max_left_solution(const Tensor& a, const Tensor& b);

/// Largest X with A * X <= B: (A^T * B^C)^C.
Tensor max_right_solution(const Tensor& a, const Tensor& b);

struct SolveReport {
  bool solvable = false;
  /// Largest X satisfying the <= relaxation; always present.
  Tensor max_solution;
  /// Equal to max_solution when the exact equation is solvable.
  std::optional<Tensor> exact_witness;
};

/// Exact equation A * X = B.
SolveReport solve_right(const Tensor& a, const Tensor& b);

/// Exact equation X * A = B.
SolveReport solve_left(const Tensor& a, const Tensor& b);

/// The explicit candidate for A * X = B on square tensors, read literally:
/// c(i, j) = 1 iff a(i, i) = 0 or b(i, j) = 1. Not a solvability oracle;
/// use solve_right for that.
Tensor construct_square_solution(const Tensor& a, const Tensor& b);

/// R(B) is a subset of R(A), i.e. B = A * U for some U.
bool range_subset(const Tensor& b, const Tensor& a);

/// R(A) == R(B).
bool range_equal(const Tensor& a, const Tensor& b);

/// R(B^T) == R(B^T * A^T): then A * B * C = A * B * D implies B * C = B * D.
bool left_cancellable(const Tensor& a, const Tensor& b);

/// R(A) == R(A * B): then C * A * B = D * A * B implies C * A = D * A.
bool right_cancellable(const Tensor& a, const Tensor& b);

}  // namespace boolten
