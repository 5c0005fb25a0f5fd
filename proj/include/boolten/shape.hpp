#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace boolten {

using Dims = std::vector<std::size_t>;

/// Row group (I1..IM) and column group (J1..JN) of a Boolean tensor.
///
/// Either group may be empty (its product is then 1), which is how vectors
/// such as the right operand of a range-space membership test are
/// represented. At least one dimension must be present overall and every
/// dimension is >= 1.
class Shape {
 public:
  Shape() = default;
  Shape(Dims row_dims, Dims col_dims);

  const Dims& row_dims() const noexcept { return row_dims_; }
  const Dims& col_dims() const noexcept { return col_dims_; }

  std::size_t row_count() const noexcept { return row_count_; }
  std::size_t col_count() const noexcept { return col_count_; }
  std::size_t cells() const noexcept { return row_count_ * col_count_; }

  /// row_dims == col_dims, the precondition of trace, closure and friends.
  bool is_square() const noexcept { return row_dims_ == col_dims_; }

  Shape transposed() const { return Shape(col_dims_, row_dims_); }

  /// "([2,3],[2,3])"
  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  Dims row_dims_;
  Dims col_dims_;
  std::size_t row_count_ = 1;
  std::size_t col_count_ = 1;
};

/// Largest cell count a tensor may hold.
inline constexpr std::size_t kMaxCells = std::size_t{1} << 32;

std::size_t dims_product(std::span<const std::size_t> dims);

std::string dims_to_string(std::span<const std::size_t> dims);

/// 1-based coordinates into one dimension group.
using MultiIndex = std::vector<std::size_t>;

/// Row-major flat offset (0-based, last coordinate fastest) of a 1-based
/// multi-index. Throws on length or range mismatch.
std::size_t flat_index(std::span<const std::size_t> dims,
                       std::span<const std::size_t> coords);

/// Inverse of flat_index.
MultiIndex unflatten(std::span<const std::size_t> dims, std::size_t offset);

}  // namespace boolten
