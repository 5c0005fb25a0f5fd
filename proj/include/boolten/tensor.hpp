#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolten/shape.hpp"

namespace boolten {

/// Dense Boolean tensor over a (row group, column group) multi-index.
///
/// Storage is the row-major flattening: row_count rows, each packed into
/// 64-bit words with the column multi-index varying fastest. Padding bits
/// past col_count are always zero, so word-wise comparison and popcount are
/// exact. Values behave like any regular type; operations never share
/// storage.
class Tensor {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Tensor() = default;
  /// All-zero tensor of the given shape.
  explicit Tensor(Shape shape);

  static Tensor zeros(Shape shape) { return Tensor(std::move(shape)); }
  static Tensor ones(Shape shape);

  const Shape& shape() const noexcept { return shape_; }
  std::size_t rows() const noexcept { return shape_.row_count(); }
  std::size_t cols() const noexcept { return shape_.col_count(); }
  std::size_t words_per_row() const noexcept { return words_per_row_; }

  /// Flat (0-based) addressing of the matrix flattening.
  bool get(std::size_t row, std::size_t col) const noexcept {
    return (words_[row * words_per_row_ + col / kWordBits] >>
            (col % kWordBits)) &
           1U;
  }
  void set(std::size_t row, std::size_t col, bool value = true) noexcept {
    Word& w = words_[row * words_per_row_ + col / kWordBits];
    const Word mask = Word{1} << (col % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
  }

  /// Entry at 1-based multi-indices (i1..iM | j1..jN).
  bool at(std::span<const std::size_t> row_index,
          std::span<const std::size_t> col_index) const;

  std::span<const Word> row(std::size_t r) const noexcept {
    return {words_.data() + r * words_per_row_, words_per_row_};
  }
  std::span<Word> row(std::size_t r) noexcept {
    return {words_.data() + r * words_per_row_, words_per_row_};
  }

  /// Number of 1 entries.
  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;

  /// Row-major '0'/'1' string, the payload of the tensor file format.
  std::string bit_string() const;

  /// Same bits under another shape with the same cell count.
  Tensor reshape(Shape shape) const;

  friend bool operator==(const Tensor& a, const Tensor& b) noexcept {
    return a.shape_ == b.shape_ && a.words_ == b.words_;
  }

 private:
  Shape shape_;
  std::size_t words_per_row_ = 0;
  std::vector<Word> words_;
};

/// Builds a tensor from its row-major bit string ('0'/'1' characters).
Tensor make_tensor(Shape shape, std::string_view bits);
Tensor make_tensor(Shape shape, const std::vector<bool>& bits);

/// Kronecker-delta tensor of shape (dims, dims).
Tensor identity(const Dims& dims);

/// Tensor of a bijection on the flattened index set [0, prod(dims)):
/// entry (i, j) is 1 iff image[i] == j.
Tensor permutation_tensor(std::span<const std::size_t> image, const Dims& dims);

/// Einstein product contracting A's column group against B's row group.
/// The dimension lists must match exactly.
Tensor einstein_product(const Tensor& a, const Tensor& b);

/// Entrywise OR.
Tensor add(const Tensor& a, const Tensor& b);

Tensor transpose(const Tensor& a);

/// Entrywise bit flip.
Tensor complement(const Tensor& a);

/// Complement of the transpose, written A^{CT} in the literature.
inline Tensor complement_transpose(const Tensor& a) {
  return complement(transpose(a));
}

/// Entrywise a <= b.
bool leq(const Tensor& a, const Tensor& b);

/// Count of 1s on the diagonal. Requires a square shape.
std::size_t trace(const Tensor& a);

inline std::size_t weight(const Tensor& a) { return a.weight(); }

/// Sum of all positive powers A + A^2 + ... . Requires a square shape.
Tensor closure(const Tensor& a);

enum class BlockKind { row, column, diagonal };

/// Two-block composition. Row blocks share the row group and stack the
/// column group mode-wise (J_i + K_i); column blocks are the transpose
/// dual; the diagonal form zero-pads both off-diagonal blocks.
Tensor block_compose(BlockKind kind, const Tensor& a, const Tensor& b);

/// Lines up the row subblocks A(i1..iM | :) into a vector of shape
/// ([row_count * col_count], []).
Tensor vec(const Tensor& a);

/// 1-based position t of subblock (i1..iM) inside vec(A).
std::size_t vec_block_index(const Dims& row_dims, const MultiIndex& index);

struct PropertyFlags {
  bool symmetric = false;
  bool idempotent = false;
  bool orthogonal = false;
  bool diagonal = false;
  bool permutation = false;
};

/// Flags needing a square shape are false for non-square tensors.
PropertyFlags classify(const Tensor& a);

inline Tensor operator*(const Tensor& a, const Tensor& b) {
  return einstein_product(a, b);
}
inline Tensor operator+(const Tensor& a, const Tensor& b) { return add(a, b); }
inline bool operator<=(const Tensor& a, const Tensor& b) { return leq(a, b); }

}  // namespace boolten
