#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "boolten/tensor.hpp"

namespace testing_support {

using boolten::Dims;
using boolten::Shape;
using boolten::Tensor;

// "10|10" -> shape ([2],[2]) with rows 10 and 10.
inline Tensor grid(std::string_view text) {
  std::vector<std::string> rows(1);
  for (char c : text) {
    if (c == '|') {
      rows.emplace_back();
    } else {
      rows.back() += c;
    }
  }
  std::string bits;
  for (const auto& r : rows) bits += r;
  return boolten::make_tensor(Shape({rows.size()}, {rows.front().size()}), bits);
}

// Reinterprets a grid under another shape with the same cells.
inline Tensor grid(std::string_view text, Dims rows, Dims cols) {
  return grid(text).reshape(Shape(std::move(rows), std::move(cols)));
}

// Builds a tensor from frontal slices: slices[c] is a grid over the
// flattened row group for flat column index c.
inline Tensor from_slices(Dims rows, Dims cols,
                          const std::vector<std::string>& slices) {
  Tensor t(Shape(std::move(rows), std::move(cols)));
  for (std::size_t c = 0; c < slices.size(); ++c) {
    const Tensor s = grid(slices[c]);
    for (std::size_t r = 0; r < t.rows(); ++r) {
      t.set(r, c, s.get(r / s.cols(), r % s.cols()));
    }
  }
  return t;
}

inline std::vector<std::string> repeat(const std::string& slice, std::size_t n) {
  return std::vector<std::string>(n, slice);
}

const std::string z23 = "000|000";

// Six-slice tensors of shape ([2,3],[2,3]).
inline Tensor six(const std::vector<std::string>& slices) {
  return from_slices({2, 3}, {2, 3}, slices);
}

// Complement-product example.
inline Tensor product_example_a() {
  return six({"100|001", "000|001", "000|001", "000|001", "000|001", "000|001"});
}
inline Tensor product_example_b() { return six(repeat("100|000", 6)); }

// g-inverse non-uniqueness example.
inline Tensor ginv_example_a() { return six(repeat("100|100", 6)); }
inline Tensor ginv_example_x() { return six({"011|111", z23, z23, z23, z23, z23}); }
inline Tensor ginv_example_y() { return six({"100|001", z23, z23, z23, z23, z23}); }

// Weight for the weighted non-uniqueness example; the other weight is O.
inline Tensor weight_example_m() {
  return six({"100|000", "100|001", "000|001", "100|000", "100|001", "000|001"});
}

// Non-symmetric tensor whose trace products both equal 2.
inline Tensor trace_example_a() {
  return from_slices({2, 2}, {2, 2}, repeat("10|10", 4));
}

// Rank-2 example of shape ([2,2],[2,2]).
inline Tensor rank_example_a() {
  return from_slices({2, 2}, {2, 2}, {"10|00", "00|00", "00|10", "10|00"});
}

// A g-inverse X of A with X*A*X != X.
inline Tensor nonreflexive_example_a() {
  return six({"110|100", z23, z23, z23, z23, z23});
}
inline Tensor nonreflexive_example_x() {
  return six({"100|000", "010|000", z23, "000|100", z23, z23});
}

}  // namespace testing_support
