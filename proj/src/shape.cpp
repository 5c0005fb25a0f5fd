#include "boolten/shape.hpp"

#include <sstream>

#include "boolten/error.hpp"

namespace boolten {

std::size_t dims_product(std::span<const std::size_t> dims) {
  std::size_t product = 1;
  for (std::size_t d : dims) {
    if (d == 0) {
      throw Error(ErrorKind::invalid_argument,
                  "dimension must be >= 1 in " + dims_to_string(dims));
    }
    if (product > kMaxCells / d) {
      throw Error(ErrorKind::resource,
                  "dimension product overflows in " + dims_to_string(dims));
    }
    product *= d;
  }
  return product;
}

std::string dims_to_string(std::span<const std::size_t> dims) {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k != 0) out << ',';
    out << dims[k];
  }
  out << ']';
  return out.str();
}

Shape::Shape(Dims row_dims, Dims col_dims)
    : row_dims_(std::move(row_dims)), col_dims_(std::move(col_dims)) {
  if (row_dims_.empty() && col_dims_.empty()) {
    throw Error(ErrorKind::invalid_argument,
                "shape needs at least one dimension");
  }
  row_count_ = dims_product(row_dims_);
  col_count_ = dims_product(col_dims_);
  if (row_count_ > kMaxCells / col_count_) {
    throw Error(ErrorKind::resource, "shape " + to_string() +
                                         " exceeds the supported cell count");
  }
}

std::string Shape::to_string() const {
  return "(" + dims_to_string(row_dims_) + "," + dims_to_string(col_dims_) +
         ")";
}

std::size_t flat_index(std::span<const std::size_t> dims,
                       std::span<const std::size_t> coords) {
  if (coords.size() != dims.size()) {
    throw Error(ErrorKind::invalid_argument,
                "multi-index has " + std::to_string(coords.size()) +
                    " coordinates, group " + dims_to_string(dims) + " needs " +
                    std::to_string(dims.size()));
  }
  std::size_t offset = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (coords[k] < 1 || coords[k] > dims[k]) {
      throw Error(ErrorKind::invalid_argument,
                  "coordinate " + std::to_string(coords[k]) + " outside [1," +
                      std::to_string(dims[k]) + "]");
    }
    offset = offset * dims[k] + (coords[k] - 1);
  }
  return offset;
}

MultiIndex unflatten(std::span<const std::size_t> dims, std::size_t offset) {
  MultiIndex coords(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    coords[k] = offset % dims[k] + 1;
    offset /= dims[k];
  }
  return coords;
}

}  // namespace boolten
