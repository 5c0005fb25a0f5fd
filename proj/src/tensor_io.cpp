#include "boolten/tensor_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "boolten/error.hpp"

namespace boolten {
namespace {

using nlohmann::ordered_json;

Dims read_dims(const ordered_json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_array()) {
    throw Error(ErrorKind::parse, std::string("missing array \"") + key + "\"");
  }
  Dims dims;
  for (const auto& d : *it) {
    if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) {
      throw Error(ErrorKind::parse, std::string("\"") + key +
                                        "\" must hold positive integers");
    }
    dims.push_back(d.get<std::size_t>());
  }
  return dims;
}

}  // namespace

std::string to_json(const Tensor& t) {
  ordered_json doc;
  doc["row_dims"] = t.shape().row_dims();
  doc["col_dims"] = t.shape().col_dims();
  doc["bits"] = t.bit_string();
  return doc.dump() + "\n";
}

Tensor from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw Error(ErrorKind::parse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::parse, "expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "row_dims" && key != "col_dims" && key != "bits") {
      throw Error(ErrorKind::parse, "unknown key \"" + key + "\"");
    }
  }
  Dims rows = read_dims(doc, "row_dims");
  Dims cols = read_dims(doc, "col_dims");
  auto bits = doc.find("bits");
  if (bits == doc.end() || !bits->is_string()) {
    throw Error(ErrorKind::parse, "missing string \"bits\"");
  }
  try {
    return make_tensor(Shape(std::move(rows), std::move(cols)),
                       bits->get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorKind::parse, e.what());
  }
}

Tensor load_tensor(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return from_json(buf.str());
  } catch (const Error& e) {
    throw Error(ErrorKind::parse, path.string() + ": " + e.what());
  }
}

void save_tensor(const Tensor& t, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::resource, "cannot write " + path.string());
  out << to_json(t);
}

}  // namespace boolten
