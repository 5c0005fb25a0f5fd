#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "boolten/decomposition.hpp"
#include "boolten/tensor.hpp"

namespace boolten {

/// Largest shape the exhaustive enumerations accept.
inline constexpr std::size_t kMaxEnumerationCells = 24;

/// Every tensor of one shape in ascending bit-string order (first bit most
/// significant), so the zero tensor comes first and all-ones last.
class TensorEnumeration {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Tensor;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const Shape* shape, std::uint64_t cursor)
        : shape_(shape), cursor_(cursor) {}

    Tensor operator*() const;
    iterator& operator++() {
      ++cursor_;
      return *this;
    }
    void operator++(int) { ++cursor_; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.cursor_ == b.cursor_;
    }

   private:
    const Shape* shape_ = nullptr;
    std::uint64_t cursor_ = 0;
  };

  /// Throws ErrorKind::resource above kMaxEnumerationCells.
  explicit TensorEnumeration(Shape shape);

  iterator begin() const { return {&shape_, 0}; }
  iterator end() const { return {&shape_, size_}; }
  std::uint64_t size() const noexcept { return size_; }
  const Shape& shape() const noexcept { return shape_; }

 private:
  Shape shape_;
  std::uint64_t size_;
};

inline TensorEnumeration enumerate_tensors(Shape shape) {
  return TensorEnumeration(std::move(shape));
}

/// Every X with A*X*A = A, in enumeration order.
std::vector<Tensor> brute_g_inverses(const Tensor& a);

/// Whether some X satisfies A*X = B (right) or X*A = B (left), by trying
/// every candidate.
bool brute_right_solvable(const Tensor& a, const Tensor& b);
bool brute_left_solvable(const Tensor& a, const Tensor& b);

/// Whether B = A*Y for some Y of shape (A.col_dims, B.col_dims).
bool brute_range_subset(const Tensor& b, const Tensor& a);

/// Every space decomposition of A through `middle_dims`.
std::vector<SpaceDecomposition> brute_space_decompositions(
    const Tensor& a, const Dims& middle_dims);

/// Boolean rank by trying every left factor of growing width; limited to
/// 4x4 flattenings.
std::size_t brute_boolean_rank(const Tensor& a);

}  // namespace boolten
