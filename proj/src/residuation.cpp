#include "boolten/residuation.hpp"

#include "boolten/error.hpp"

namespace boolten {
namespace {

void require(bool ok, const char* op, const Tensor& a, const Tensor& b,
             const char* why) {
  if (!ok) {
    throw Error(ErrorKind::shape_mismatch,
                std::string(op) + ": " + a.shape().to_string() + " vs " +
                    b.shape().to_string() + " (" + why + ")");
  }
}

}  // namespace

Tensor max_left_solution(const Tensor& a, const Tensor& b) {
  require(a.shape().col_dims() == b.shape().col_dims(), "max_left_solution", a,
          b, "X*A and B must share col_dims");
  return complement(complement(b) * transpose(a));
}

Tensor max_right_solution(const Tensor& a, const Tensor& b) {
  require(a.shape().row_dims() == b.shape().row_dims(), "max_right_solution",
          a, b, "A*X and B must share row_dims");
  return complement(transpose(a) * complement(b));
}

SolveReport solve_right(const Tensor& a, const Tensor& b) {
  SolveReport report;
  report.max_solution = max_right_solution(a, b);
  report.solvable = a * report.max_solution == b;
  if (report.solvable) report.exact_witness = report.max_solution;
  return report;
}

SolveReport solve_left(const Tensor& a, const Tensor& b) {
  SolveReport report;
  report.max_solution = max_left_solution(a, b);
  report.solvable = report.max_solution * a == b;
  if (report.solvable) report.exact_witness = report.max_solution;
  return report;
}

Tensor construct_square_solution(const Tensor& a, const Tensor& b) {
  if (!a.shape().is_square() || a.shape() != b.shape()) {
    throw Error(ErrorKind::shape_mismatch,
                "construct_square_solution needs equal square shapes, got " +
                    a.shape().to_string() + " and " + b.shape().to_string());
  }
  Tensor c(a.shape());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const bool diagonal_zero = !a.get(i, i);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (diagonal_zero || b.get(i, j)) c.set(i, j);
    }
  }
  return c;
}

bool range_subset(const Tensor& b, const Tensor& a) {
  require(a.shape().row_dims() == b.shape().row_dims(), "range_subset", b, a,
          "range spaces live in different row groups");
  return solve_right(a, b).solvable;
}

bool range_equal(const Tensor& a, const Tensor& b) {
  return range_subset(a, b) && range_subset(b, a);
}

bool left_cancellable(const Tensor& a, const Tensor& b) {
  const Tensor bt = transpose(b);
  return range_equal(bt, bt * transpose(a));
}

bool right_cancellable(const Tensor& a, const Tensor& b) {
  return range_equal(a, a * b);
}

}  // namespace boolten
