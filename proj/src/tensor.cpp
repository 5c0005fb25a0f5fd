#include "boolten/tensor.hpp"

#include <algorithm>
#include <bit>

#include "boolten/error.hpp"

namespace boolten {
namespace {

std::size_t words_for(std::size_t bits) {
  return (bits + Tensor::kWordBits - 1) / Tensor::kWordBits;
}

// Mask of the valid bits in the last word of a row.
Tensor::Word tail_mask(std::size_t cols) {
  const std::size_t used = cols % Tensor::kWordBits;
  return used == 0 ? ~Tensor::Word{0} : (Tensor::Word{1} << used) - 1;
}

void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
  if (a.shape() != b.shape()) {
    throw Error(ErrorKind::shape_mismatch,
                std::string(op) + ": shapes " + a.shape().to_string() +
                    " and " + b.shape().to_string() + " differ");
  }
}

void require_square(const Tensor& a, const char* op) {
  if (!a.shape().is_square()) {
    throw Error(ErrorKind::shape_mismatch,
                std::string(op) + " needs row_dims == col_dims, got " +
                    a.shape().to_string());
  }
}

}  // namespace

Tensor::Tensor(Shape shape)
    : shape_(std::move(shape)),
      words_per_row_(words_for(shape_.col_count())),
      words_(shape_.row_count() * words_per_row_, 0) {}

Tensor Tensor::ones(Shape shape) {
  Tensor t(std::move(shape));
  const Word last = tail_mask(t.cols());
  for (std::size_t r = 0; r < t.rows(); ++r) {
    auto row = t.row(r);
    std::fill(row.begin(), row.end(), ~Word{0});
    row.back() = last;
  }
  return t;
}

bool Tensor::at(std::span<const std::size_t> row_index,
                std::span<const std::size_t> col_index) const {
  return get(flat_index(shape_.row_dims(), row_index),
             flat_index(shape_.col_dims(), col_index));
}

std::size_t Tensor::weight() const noexcept {
  std::size_t count = 0;
  for (Word w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

bool Tensor::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(),
                     [](Word w) { return w == 0; });
}

std::string Tensor::bit_string() const {
  std::string bits;
  bits.reserve(shape_.cells());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) bits.push_back(get(r, c) ? '1' : '0');
  }
  return bits;
}

Tensor Tensor::reshape(Shape shape) const {
  if (shape.cells() != shape_.cells()) {
    throw Error(ErrorKind::shape_mismatch,
                "reshape " + shape_.to_string() + " -> " + shape.to_string() +
                    " changes the cell count");
  }
  Tensor out(std::move(shape));
  const std::size_t n = out.cols();
  std::size_t flat = 0;
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c, ++flat) {
      if (get(r, c)) out.set(flat / n, flat % n);
    }
  }
  return out;
}

Tensor make_tensor(Shape shape, std::string_view bits) {
  if (bits.size() != shape.cells()) {
    throw Error(ErrorKind::invalid_argument,
                "bit length mismatch for shape " + shape.to_string() +
                    ": expected " + std::to_string(shape.cells()) + ", got " +
                    std::to_string(bits.size()));
  }
  Tensor t(std::move(shape));
  const std::size_t n = t.cols();
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1') {
      t.set(k / n, k % n);
    } else if (bits[k] != '0') {
      throw Error(ErrorKind::invalid_argument,
                  "bit string may only contain '0' and '1', found '" +
                      std::string(1, bits[k]) + "' at position " +
                      std::to_string(k));
    }
  }
  return t;
}

Tensor make_tensor(Shape shape, const std::vector<bool>& bits) {
  if (bits.size() != shape.cells()) {
    throw Error(ErrorKind::invalid_argument,
                "bit length mismatch for shape " + shape.to_string() +
                    ": expected " + std::to_string(shape.cells()) + ", got " +
                    std::to_string(bits.size()));
  }
  Tensor t(std::move(shape));
  const std::size_t n = t.cols();
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k]) t.set(k / n, k % n);
  }
  return t;
}

Tensor identity(const Dims& dims) {
  if (dims.empty()) {
    throw Error(ErrorKind::invalid_argument, "identity needs at least one dimension");
  }
  Tensor t(Shape(dims, dims));
  for (std::size_t i = 0; i < t.rows(); ++i) t.set(i, i);
  return t;
}

Tensor permutation_tensor(std::span<const std::size_t> image, const Dims& dims) {
  if (dims.empty()) {
    throw Error(ErrorKind::invalid_argument,
                "permutation tensor needs at least one dimension");
  }
  const std::size_t n = dims_product(dims);
  if (image.size() != n) {
    throw Error(ErrorKind::invalid_argument,
                "permutation has " + std::to_string(image.size()) +
                    " images, index set has " + std::to_string(n));
  }
  std::vector<bool> hit(n, false);
  Tensor t(Shape(dims, dims));
  for (std::size_t i = 0; i < n; ++i) {
    if (image[i] >= n || hit[image[i]]) {
      throw Error(ErrorKind::invalid_argument,
                  "map is not a bijection on [0," + std::to_string(n) +
                      "): image of " + std::to_string(i) + " is " +
                      std::to_string(image[i]));
    }
    hit[image[i]] = true;
    t.set(i, image[i]);
  }
  return t;
}

Tensor einstein_product(const Tensor& a, const Tensor& b) {
  if (a.shape().col_dims() != b.shape().row_dims()) {
    throw Error(ErrorKind::shape_mismatch,
                "contraction mismatch: " + a.shape().to_string() + " * " +
                    b.shape().to_string() +
                    " (left col_dims must equal right row_dims)");
  }
  Tensor out(Shape(a.shape().row_dims(), b.shape().col_dims()));
  const std::size_t inner_words = a.words_per_row();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    auto src = a.row(i);
    for (std::size_t w = 0; w < inner_words; ++w) {
      Tensor::Word bits = src[w];
      while (bits != 0) {
        const std::size_t k = w * Tensor::kWordBits +
                              static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        auto rhs = b.row(k);
        for (std::size_t x = 0; x < dst.size(); ++x) dst[x] |= rhs[x];
      }
    }
  }
  return out;
}

Tensor add(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "add");
  Tensor out = a;
  for (std::size_t r = 0; r < out.rows(); ++r) {
    auto dst = out.row(r);
    auto src = b.row(r);
    for (std::size_t x = 0; x < dst.size(); ++x) dst[x] |= src[x];
  }
  return out;
}

Tensor transpose(const Tensor& a) {
  Tensor out(a.shape().transposed());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto src = a.row(r);
    for (std::size_t w = 0; w < src.size(); ++w) {
      Tensor::Word bits = src[w];
      while (bits != 0) {
        const std::size_t c = w * Tensor::kWordBits +
                              static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        out.set(c, r);
      }
    }
  }
  return out;
}

Tensor complement(const Tensor& a) {
  Tensor out = a;
  const Tensor::Word last = tail_mask(a.cols());
  for (std::size_t r = 0; r < out.rows(); ++r) {
    auto row = out.row(r);
    for (auto& w : row) w = ~w;
    row.back() &= last;
  }
  return out;
}

bool leq(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "leq");
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto x = a.row(r);
    auto y = b.row(r);
    for (std::size_t w = 0; w < x.size(); ++w) {
      if ((x[w] & ~y[w]) != 0) return false;
    }
  }
  return true;
}

std::size_t trace(const Tensor& a) {
  require_square(a, "trace");
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) count += a.get(i, i) ? 1 : 0;
  return count;
}

Tensor closure(const Tensor& a) {
  require_square(a, "closure");
  // (I + A)^(2^k) holds all powers 0..2^k; it stabilises once 2^k >= n - 1.
  Tensor reach = add(identity(a.shape().row_dims()), a);
  const std::size_t cap = std::max<std::size_t>(a.rows(), 1);
  bool settled = false;
  for (std::size_t step = 0; step <= cap; ++step) {
    Tensor next = reach * reach;
    if (next == reach) {
      settled = true;
      break;
    }
    reach = std::move(next);
  }
  if (!settled) {
    throw Error(ErrorKind::internal, "closure did not reach a fixpoint");
  }
  return a * reach;
}

Tensor block_compose(BlockKind kind, const Tensor& a, const Tensor& b) {
  const Shape& sa = a.shape();
  const Shape& sb = b.shape();
  auto mismatch = [&](const std::string& why) {
    return Error(ErrorKind::shape_mismatch,
                 "block composition of " + sa.to_string() + " and " +
                     sb.to_string() + ": " + why);
  };
  if (kind == BlockKind::column) {
    if (sa.col_dims() != sb.col_dims()) {
      throw mismatch("column blocks need equal col_dims");
    }
    return transpose(block_compose(BlockKind::row, transpose(a), transpose(b)));
  }
  if (kind == BlockKind::row && sa.row_dims() != sb.row_dims()) {
    throw mismatch("row blocks need equal row_dims");
  }
  if (sa.col_dims().size() != sb.col_dims().size()) {
    throw mismatch("column groups have different orders");
  }
  if (kind == BlockKind::diagonal &&
      sa.row_dims().size() != sb.row_dims().size()) {
    throw mismatch("row groups have different orders");
  }

  Dims cols(sa.col_dims().size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    cols[k] = sa.col_dims()[k] + sb.col_dims()[k];
  }
  Dims rows = sa.row_dims();
  if (kind == BlockKind::diagonal) {
    for (std::size_t k = 0; k < rows.size(); ++k) rows[k] += sb.row_dims()[k];
  }
  Tensor out(Shape(rows, cols));

  // Copy `src` into `out`, shifting every coordinate of a group by the
  // matching offset.
  auto place = [&](const Tensor& src, const Dims& row_shift,
                   const Dims& col_shift) {
    const Shape& s = src.shape();
    for (std::size_t r = 0; r < src.rows(); ++r) {
      MultiIndex ri = unflatten(s.row_dims(), r);
      for (std::size_t k = 0; k < ri.size(); ++k) ri[k] += row_shift[k];
      const std::size_t orow = flat_index(rows, ri);
      for (std::size_t c = 0; c < src.cols(); ++c) {
        if (!src.get(r, c)) continue;
        MultiIndex ci = unflatten(s.col_dims(), c);
        for (std::size_t k = 0; k < ci.size(); ++k) ci[k] += col_shift[k];
        out.set(orow, flat_index(cols, ci));
      }
    }
  };
  const Dims no_rows(rows.size(), 0);
  place(a, no_rows, Dims(cols.size(), 0));
  place(b, kind == BlockKind::diagonal ? sa.row_dims() : no_rows, sa.col_dims());
  return out;
}

Tensor vec(const Tensor& a) {
  return a.reshape(Shape({a.shape().cells()}, {}));
}

std::size_t vec_block_index(const Dims& row_dims, const MultiIndex& index) {
  return flat_index(row_dims, index) + 1;
}

PropertyFlags classify(const Tensor& a) {
  PropertyFlags flags;
  if (!a.shape().is_square()) return flags;
  const Tensor at = transpose(a);
  const Tensor id = identity(a.shape().row_dims());
  flags.symmetric = a == at;
  flags.idempotent = a * a == a;
  flags.orthogonal = a * at == id && at * a == id;

  flags.diagonal = true;
  std::vector<std::size_t> col_hits(a.cols(), 0);
  bool one_per_row = true;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::size_t in_row = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!a.get(r, c)) continue;
      ++in_row;
      ++col_hits[c];
      if (r != c) flags.diagonal = false;
    }
    one_per_row = one_per_row && in_row == 1;
  }
  flags.permutation =
      one_per_row && std::all_of(col_hits.begin(), col_hits.end(),
                                 [](std::size_t h) { return h == 1; });
  if (flags.permutation != flags.orthogonal) {
    throw Error(ErrorKind::internal,
                "permutation and orthogonality disagree for " +
                    a.shape().to_string());
  }
  return flags;
}

}  // namespace boolten
