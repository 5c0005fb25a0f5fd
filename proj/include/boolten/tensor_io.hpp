#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "boolten/tensor.hpp"

namespace boolten {

/// {"row_dims":[..],"col_dims":[..],"bits":"0101.."} with a trailing newline.
std::string to_json(const Tensor& t);

/// Inverse of to_json. Throws ErrorKind::parse on malformed documents.
Tensor from_json(std::string_view text);

Tensor load_tensor(const std::filesystem::path& path);
void save_tensor(const Tensor& t, const std::filesystem::path& path);

}  // namespace boolten
