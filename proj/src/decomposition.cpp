#include "boolten/decomposition.hpp"

#include <cstdint>
#include <vector>

#include "boolten/error.hpp"
#include "boolten/ginverse.hpp"
#include "boolten/residuation.hpp"

namespace boolten {
namespace {

constexpr std::size_t kMaxFactorCells = 24;

// Tensor whose bit string, read as a binary numeral with the first bit most
// significant, equals `value`.
Tensor from_numeral(const Shape& shape, std::uint64_t value) {
  Tensor t(shape);
  const std::size_t n = t.cols();
  const std::size_t cells = shape.cells();
  for (std::size_t p = 0; p < cells; ++p) {
    if ((value >> (cells - 1 - p)) & 1U) t.set(p / n, p % n);
  }
  return t;
}

}  // namespace

bool verify_space_decomposition(const Tensor& a, const Tensor& left,
                                const Tensor& right) {
  if (left.shape().row_dims() != a.shape().row_dims() ||
      right.shape().col_dims() != a.shape().col_dims() ||
      left.shape().col_dims() != right.shape().row_dims()) {
    throw Error(ErrorKind::shape_mismatch,
                "factors " + left.shape().to_string() + " * " +
                    right.shape().to_string() + " cannot decompose " +
                    a.shape().to_string());
  }
  return left * right == a && range_equal(a, left) &&
         range_equal(transpose(a), transpose(right));
}

std::optional<SpaceDecomposition> search_space_decomposition(
    const Tensor& a, const Dims& middle_dims, std::size_t middle_cap) {
  const std::size_t middle = dims_product(middle_dims);
  if (middle_dims.empty() || middle > middle_cap) {
    throw Error(ErrorKind::resource,
                "middle group " + dims_to_string(middle_dims) +
                    " exceeds the search cap of " + std::to_string(middle_cap));
  }
  const Shape left_shape(a.shape().row_dims(), middle_dims);
  const Shape right_shape(middle_dims, a.shape().col_dims());
  if (left_shape.cells() > kMaxFactorCells ||
      right_shape.cells() > kMaxFactorCells) {
    throw Error(ErrorKind::resource,
                "factor shapes " + left_shape.to_string() + ", " +
                    right_shape.to_string() + " exceed " +
                    std::to_string(kMaxFactorCells) + " cells");
  }

  const Tensor at = transpose(a);
  for (std::uint64_t v = std::uint64_t{1} << left_shape.cells(); v-- > 0;) {
    Tensor left = from_numeral(left_shape, v);
    if (!range_equal(a, left)) continue;
    // Every exact solution lies below the residuated maximum.
    const Tensor top = max_right_solution(left, a);
    if (left * top != a) continue;

    std::vector<std::size_t> ones;  // flat positions, most significant first
    for (std::size_t p = 0; p < right_shape.cells(); ++p) {
      if (top.get(p / top.cols(), p % top.cols())) ones.push_back(p);
    }
    for (std::uint64_t u = std::uint64_t{1} << ones.size(); u-- > 0;) {
      Tensor right(right_shape);
      for (std::size_t k = 0; k < ones.size(); ++k) {
        if ((u >> (ones.size() - 1 - k)) & 1U) {
          right.set(ones[k] / right.cols(), ones[k] % right.cols());
        }
      }
      if (left * right == a && range_equal(at, transpose(right))) {
        return SpaceDecomposition{std::move(left), std::move(right),
                                  middle_dims};
      }
    }
  }
  return std::nullopt;
}

FactorInverses factor_g_inverses(const Tensor& a,
                                 const SpaceDecomposition& d) {
  if (!verify_space_decomposition(a, d.left, d.right)) {
    throw Error(ErrorKind::invalid_argument,
                "factors are not a space decomposition of " +
                    a.shape().to_string());
  }
  const Tensor g = max_g_inverse(a);
  FactorInverses inv{d.right * g, g * d.left};
  if (inv.left_inverse * a != d.right || a * inv.right_inverse != d.left) {
    throw Error(ErrorKind::internal,
                "factor inverses do not reproduce the factors");
  }
  return inv;
}

Tensor g_inverse_from_decomposition(const Tensor& a,
                                    const SpaceDecomposition& d) {
  const FactorInverses inv = factor_g_inverses(a, d);
  Tensor x = inv.right_inverse * inv.left_inverse;
  if (!check_g_axioms(a, x).ax1) {
    throw Error(ErrorKind::internal,
                "product of factor inverses is not a g-inverse");
  }
  return x;
}

bool has_rank_at_most_one(const Tensor& a) {
  std::optional<std::size_t> first;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto row = a.row(r);
    bool zero = true;
    for (auto w : row) zero = zero && w == 0;
    if (zero) continue;
    if (!first) {
      first = r;
      continue;
    }
    auto ref = a.row(*first);
    for (std::size_t w = 0; w < row.size(); ++w) {
      if (row[w] != ref[w]) return false;
    }
  }
  return true;
}

std::optional<bool> is_regular_by_rank(const Tensor& a) {
  if (a.weight() <= 1 || has_rank_at_most_one(a)) return true;
  return std::nullopt;
}

}  // namespace boolten
