#include "boolten/oracle.hpp"

#include "boolten/error.hpp"
#include "boolten/residuation.hpp"

namespace boolten {
namespace {

void require_enumerable(const Shape& shape) {
  if (shape.cells() > kMaxEnumerationCells) {
    throw Error(ErrorKind::resource,
                "cannot enumerate " + shape.to_string() + ": more than " +
                    std::to_string(kMaxEnumerationCells) + " cells");
  }
}

}  // namespace

Tensor TensorEnumeration::iterator::operator*() const {
  Tensor t(*shape_);
  const std::size_t cells = shape_->cells();
  const std::size_t n = t.cols();
  for (std::size_t p = 0; p < cells; ++p) {
    if ((cursor_ >> (cells - 1 - p)) & 1U) t.set(p / n, p % n);
  }
  return t;
}

TensorEnumeration::TensorEnumeration(Shape shape) : shape_(std::move(shape)) {
  require_enumerable(shape_);
  size_ = std::uint64_t{1} << shape_.cells();
}

std::vector<Tensor> brute_g_inverses(const Tensor& a) {
  std::vector<Tensor> out;
  for (Tensor x : enumerate_tensors(a.shape().transposed())) {
    if (a * x * a == a) out.push_back(std::move(x));
  }
  return out;
}

bool brute_right_solvable(const Tensor& a, const Tensor& b) {
  if (a.shape().row_dims() != b.shape().row_dims()) {
    throw Error(ErrorKind::shape_mismatch, "A*X = B needs equal row groups");
  }
  for (const Tensor& x :
       enumerate_tensors(Shape(a.shape().col_dims(), b.shape().col_dims()))) {
    if (a * x == b) return true;
  }
  return false;
}

bool brute_left_solvable(const Tensor& a, const Tensor& b) {
  if (a.shape().col_dims() != b.shape().col_dims()) {
    throw Error(ErrorKind::shape_mismatch, "X*A = B needs equal column groups");
  }
  for (const Tensor& x :
       enumerate_tensors(Shape(b.shape().row_dims(), a.shape().row_dims()))) {
    if (x * a == b) return true;
  }
  return false;
}

bool brute_range_subset(const Tensor& b, const Tensor& a) {
  return brute_right_solvable(a, b);
}

std::vector<SpaceDecomposition> brute_space_decompositions(
    const Tensor& a, const Dims& middle_dims) {
  const Shape left_shape(a.shape().row_dims(), middle_dims);
  const Shape right_shape(middle_dims, a.shape().col_dims());
  require_enumerable(left_shape);
  require_enumerable(right_shape);
  std::vector<SpaceDecomposition> out;
  for (const Tensor& f : enumerate_tensors(left_shape)) {
    for (const Tensor& r : enumerate_tensors(right_shape)) {
      if (f * r == a && brute_range_subset(a, f) && brute_range_subset(f, a) &&
          brute_range_subset(transpose(a), transpose(r)) &&
          brute_range_subset(transpose(r), transpose(a))) {
        out.push_back({f, r, middle_dims});
      }
    }
  }
  return out;
}

std::size_t brute_boolean_rank(const Tensor& a) {
  if (a.rows() > 4 || a.cols() > 4) {
    throw Error(ErrorKind::resource,
                "brute-force rank is limited to 4x4 flattenings");
  }
  if (a.is_zero()) return 0;
  const Tensor flat = a.reshape(Shape({a.rows()}, {a.cols()}));
  for (std::size_t r = 1;; ++r) {
    // F*G = A has a solution G iff the residuated maximum is one.
    for (const Tensor& f : enumerate_tensors(Shape({a.rows()}, {r}))) {
      if (f * max_right_solution(f, flat) == flat) return r;
    }
  }
}

}  // namespace boolten
