// Command-line front end. Talks to the library only through boolten.h.
#include <boolten.h>

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;
constexpr std::size_t kExperimentMaxCells = 16;

struct TensorDeleter {
  void operator()(bt_tensor* t) const { bt_tensor_free(t); }
};
using Handle = std::unique_ptr<bt_tensor, TensorDeleter>;

struct StringDeleter {
  void operator()(char* s) const { bt_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

// Library failure; maps to exit status 2.
class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(bt_status status) {
  if (status != BT_OK) {
    throw Failure(std::string(bt_status_name(status)) + ": " + bt_last_error());
  }
}

Handle load(const std::string& path) {
  bt_tensor* t = nullptr;
  check(bt_tensor_load(path.c_str(), &t));
  return Handle(t);
}

std::string bits_of(const bt_tensor* t) {
  char* s = nullptr;
  check(bt_tensor_bits(t, &s));
  return CString(s).get();
}

std::vector<std::size_t> dims_of(const bt_tensor* t, bool rows) {
  std::size_t count = 0;
  auto getter = rows ? bt_tensor_row_dims : bt_tensor_col_dims;
  check(getter(t, nullptr, 0, &count));
  std::vector<std::size_t> dims(count);
  check(getter(t, dims.data(), dims.size(), &count));
  return dims;
}

std::string dims_text(const std::vector<std::size_t>& dims) {
  std::string s = "[";
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(dims[k]);
  }
  return s + "]";
}

std::string shape_text(const bt_tensor* t) {
  return "(" + dims_text(dims_of(t, true)) + "," + dims_text(dims_of(t, false)) +
         ")";
}

// Key/value report; the first field is always "result".
class Report {
 public:
  explicit Report(ordered_json result) { doc_["result"] = std::move(result); }

  Report& add(const std::string& key, ordered_json value) {
    doc_[key] = std::move(value);
    return *this;
  }
  Report& add_tensor(const std::string& key, const bt_tensor* t) {
    add(key + "_shape", shape_text(t));
    return add(key + "_bits", bits_of(t));
  }

  int emit(bool as_json) const {
    if (as_json) {
      std::cout << doc_.dump() << '\n';
    } else {
      for (const auto& [key, value] : doc_.items()) {
        std::cout << key << ": "
                  << (value.is_string() ? value.get<std::string>() : value.dump())
                  << '\n';
      }
    }
    const auto& r = doc_["result"];
    const bool negative = (r.is_boolean() && !r.get<bool>()) ||
                          (r.is_string() && r.get<std::string>() == "absent");
    return negative ? kExitNegative : kExitOk;
  }

 private:
  ordered_json doc_;
};

int emit_tensor(const bt_tensor* t, const std::string& out_path) {
  if (out_path.empty()) {
    char* s = nullptr;
    check(bt_tensor_to_json(t, &s));
    std::cout << CString(s).get();
  } else {
    check(bt_tensor_save(t, out_path.c_str()));
  }
  return kExitOk;
}

int emit_optional(bt_tensor* raw, const std::string& out_path, bool as_json) {
  Handle t(raw);
  if (!t) return Report("absent").emit(as_json);
  return emit_tensor(t.get(), out_path);
}

bt_side parse_side(const std::string& side) {
  return side == "left" ? BT_SIDE_LEFT : BT_SIDE_RIGHT;
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw CLI::ValidationError("--shape", "bad dimension list '" + text + "'");
    }
    dims.push_back(std::stoul(item));
  }
  return dims;
}

int rank_regularity(const std::string& shape, bool as_json) {
  const auto x = shape.find('x');
  if (x == std::string::npos) {
    throw CLI::ValidationError("--shape", "expected ROWSxCOLS, e.g. 2,2x2");
  }
  const auto rows = parse_dims(shape.substr(0, x));
  const auto cols = parse_dims(shape.substr(x + 1));
  std::size_t cells = 1;
  for (auto d : rows) cells *= d;
  for (auto d : cols) cells *= d;
  if (cells > kExperimentMaxCells) {
    throw Failure("experiment is limited to " +
                  std::to_string(kExperimentMaxCells) + " cells");
  }

  struct Tally {
    std::uint64_t tensors = 0;
    std::uint64_t regular = 0;
  };
  std::map<std::size_t, Tally> by_rank;
  const std::uint64_t total = std::uint64_t{1} << cells;
  for (std::uint64_t i = 0; i < total; ++i) {
    bt_tensor* raw = nullptr;
    check(bt_tensor_enumerate(rows.data(), rows.size(), cols.data(), cols.size(),
                              i, &raw));
    Handle t(raw);
    std::size_t rank = 0;
    int regular = 0;
    check(bt_boolean_rank(t.get(), &rank, nullptr, nullptr));
    check(bt_is_regular(t.get(), &regular));
    ++by_rank[rank].tensors;
    by_rank[rank].regular += regular != 0;
  }

  Report report(total);
  report.add("shape", "(" + dims_text(rows) + "," + dims_text(cols) + ")");
  bool low_rank_regular = true;
  for (const auto& [rank, tally] : by_rank) {
    const std::string key = "rank_" + std::to_string(rank);
    report.add(key + "_tensors", tally.tensors);
    report.add(key + "_regular", tally.regular);
    if (rank <= 1) low_rank_regular = low_rank_regular && tally.regular == tally.tensors;
  }
  report.add("rank_le_1_all_regular", low_rank_regular);
  return report.emit(as_json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean tensor algebra under the Einstein product"};
  app.require_subcommand(1);

  std::string a, b, x, m, n, out, side = "right", shape;
  std::vector<std::string> weights;
  std::vector<std::size_t> middle;
  bool as_json = false;

  std::map<std::string, CLI::App*> verbs;
  auto verb = [&](const std::string& name, const std::string& help,
                  std::vector<std::pair<const char*, std::string*>> operands,
                  bool writes_tensor) {
    CLI::App* sub = app.add_subcommand(name, help);
    for (auto [label, target] : operands) sub->add_option(label, *target)->required();
    if (writes_tensor) sub->add_option("-o,--output", out, "write the tensor here");
    sub->add_flag("--json", as_json, "emit the report as JSON");
    verbs[name] = sub;
    return sub;
  };

  verb("einsum", "Einstein product A*B", {{"a", &a}, {"b", &b}}, true);
  verb("add", "entrywise OR", {{"a", &a}, {"b", &b}}, true);
  verb("transpose", "swap the index groups", {{"a", &a}}, true);
  verb("complement", "flip every entry", {{"a", &a}}, true);
  verb("closure", "sum of all positive powers", {{"a", &a}}, true);
  verb("trace", "ones on the diagonal", {{"a", &a}}, false);
  verb("weight", "number of ones", {{"a", &a}}, false);
  verb("classify", "structural properties", {{"a", &a}}, false);
  verb("leq", "entrywise A <= B", {{"a", &a}, {"b", &b}}, false);
  for (const char* name : {"solve", "max-solution"}) {
    verb(name, std::string(name) == "solve" ? "is A*X = B (right) or X*A = B (left) solvable"
                                            : "largest X with A*X <= B or X*A <= B",
         {{"a", &a}, {"b", &b}}, true)
        ->add_option("--side", side, "left or right")
        ->check(CLI::IsMember({"left", "right"}));
  }
  verb("range-subset", "is the range of B inside the range of A",
       {{"b", &b}, {"a", &a}}, false);
  verb("check-axioms", "Penrose conditions for X against A", {{"a", &a}, {"x", &x}},
       false)
      ->add_option("--weighted", weights, "M N weight tensors")
      ->expected(2);
  verb("regular", "does a g-inverse exist", {{"a", &a}}, false);
  verb("ginv-max", "maximum g-inverse", {{"a", &a}}, true);
  verb("ginv-reflexive", "maximum reflexive g-inverse", {{"a", &a}}, true);
  verb("ginv-13", "{1,3}-inverse", {{"a", &a}}, true);
  verb("ginv-14", "{1,4}-inverse", {{"a", &a}}, true);
  verb("mp", "Moore-Penrose inverse", {{"a", &a}}, true);
  verb("inverse", "two-sided inverse", {{"a", &a}}, true);
  verb("wmp", "weighted Moore-Penrose inverse", {{"a", &a}, {"m", &m}, {"n", &n}},
       true);
  verb("rank", "Boolean rank with witness factors", {{"a", &a}}, false);
  verb("decompose", "space decomposition through a middle group", {{"a", &a}}, false)
      ->add_option("--middle", middle, "middle dimensions d1,d2,...")
      ->delimiter(',')
      ->required();

  CLI::App* experiment = app.add_subcommand("experiment", "exploratory tabulations");
  experiment->require_subcommand(1);
  CLI::App* rank_reg = experiment->add_subcommand(
      "rank-regularity", "rank against regularity over every tensor of a shape");
  rank_reg->add_option("--shape", shape, "ROWSxCOLS, e.g. 2,2x2")->required();
  rank_reg->add_flag("--json", as_json, "emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  auto parsed = [&](const char* name) { return verbs.at(name)->parsed(); };

  try {
    if (rank_reg->parsed()) return rank_regularity(shape, as_json);

    if (parsed("einsum") || parsed("add")) {
      Handle ta = load(a), tb = load(b);
      bt_tensor* r = nullptr;
      check(parsed("einsum") ? bt_einsum(ta.get(), tb.get(), &r)
                             : bt_add(ta.get(), tb.get(), &r));
      return emit_tensor(Handle(r).get(), out);
    }
    for (auto [name, fn] :
         std::initializer_list<std::pair<const char*, bt_status (*)(const bt_tensor*, bt_tensor**)>>{
             {"transpose", bt_transpose},
             {"complement", bt_complement},
             {"closure", bt_closure},
             {"ginv-max", bt_max_g_inverse}}) {
      if (!parsed(name)) continue;
      Handle ta = load(a);
      bt_tensor* r = nullptr;
      check(fn(ta.get(), &r));
      return emit_tensor(Handle(r).get(), out);
    }
    for (auto [name, fn] :
         std::initializer_list<std::pair<const char*, bt_status (*)(const bt_tensor*, bt_tensor**)>>{
             {"ginv-13", bt_one_three_inverse},
             {"ginv-14", bt_one_four_inverse},
             {"mp", bt_mp_inverse},
             {"inverse", bt_inverse}}) {
      if (!parsed(name)) continue;
      Handle ta = load(a);
      bt_tensor* r = nullptr;
      check(fn(ta.get(), &r));
      return emit_optional(r, out, as_json);
    }
    if (parsed("ginv-reflexive")) {
      Handle ta = load(a);
      bt_tensor* r = nullptr;
      const bt_status s = bt_max_reflexive_g_inverse(ta.get(), &r);
      if (s == BT_ERR_NOT_REGULAR) return emit_optional(nullptr, out, as_json);
      check(s);
      return emit_tensor(Handle(r).get(), out);
    }
    if (parsed("wmp")) {
      Handle ta = load(a), tm = load(m), tn = load(n);
      bt_tensor* r = nullptr;
      check(bt_wmp_inverse(ta.get(), tm.get(), tn.get(), &r));
      return emit_optional(r, out, as_json);
    }
    if (parsed("max-solution")) {
      Handle ta = load(a), tb = load(b);
      bt_tensor* r = nullptr;
      check(bt_max_solution(ta.get(), tb.get(), parse_side(side), &r));
      return emit_tensor(Handle(r).get(), out);
    }
    if (parsed("trace") || parsed("weight")) {
      Handle ta = load(a);
      std::size_t v = 0;
      check(parsed("trace") ? bt_trace(ta.get(), &v) : bt_weight(ta.get(), &v));
      return Report(v).emit(as_json);
    }
    if (parsed("classify")) {
      Handle ta = load(a);
      bt_properties p{};
      check(bt_classify(ta.get(), &p));
      const int held =
          p.symmetric + p.idempotent + p.orthogonal + p.diagonal + p.permutation;
      return Report(held)
          .add("symmetric", p.symmetric != 0)
          .add("idempotent", p.idempotent != 0)
          .add("orthogonal", p.orthogonal != 0)
          .add("diagonal", p.diagonal != 0)
          .add("permutation", p.permutation != 0)
          .emit(as_json);
    }
    if (parsed("leq") || parsed("range-subset")) {
      Handle ta = load(a), tb = load(b);
      int v = 0;
      check(parsed("leq") ? bt_leq(ta.get(), tb.get(), &v)
                          : bt_range_subset(tb.get(), ta.get(), &v));
      return Report(v != 0).emit(as_json);
    }
    if (parsed("solve")) {
      Handle ta = load(a), tb = load(b);
      int solvable = 0;
      bt_tensor* raw = nullptr;
      check(bt_solve(ta.get(), tb.get(), parse_side(side), &solvable, &raw));
      Handle top(raw);
      if (solvable && !out.empty()) check(bt_tensor_save(top.get(), out.c_str()));
      return Report(solvable != 0)
          .add("side", side)
          .add_tensor("max_solution", top.get())
          .emit(as_json);
    }
    if (parsed("check-axioms")) {
      Handle ta = load(a), tx = load(x);
      bt_axioms ax{};
      if (!weights.empty()) {
        Handle tm = load(weights[0]), tn = load(weights[1]);
        check(bt_check_wmp_axioms(ta.get(), tm.get(), tn.get(), tx.get(), &ax));
      } else {
        check(bt_check_axioms(ta.get(), tx.get(), &ax));
      }
      return Report(ax.ax1 && ax.ax2 && ax.ax3 && ax.ax4)
          .add("weighted", !weights.empty())
          .add("ax1", ax.ax1 != 0)
          .add("ax2", ax.ax2 != 0)
          .add("ax3", ax.ax3 != 0)
          .add("ax4", ax.ax4 != 0)
          .emit(as_json);
    }
    if (parsed("regular")) {
      Handle ta = load(a);
      int by_rank = -1;
      int regular = 0;
      check(bt_is_regular_by_rank(ta.get(), &by_rank));
      check(bt_is_regular(ta.get(), &regular));
      return Report(regular != 0)
          .add("method", by_rank == 1 ? "rank" : "residuation")
          .emit(as_json);
    }
    if (parsed("rank")) {
      Handle ta = load(a);
      std::size_t rank = 0;
      bt_tensor *l = nullptr, *r = nullptr;
      check(bt_boolean_rank(ta.get(), &rank, &l, &r));
      Handle left(l), right(r);
      Report report(rank);
      if (left) report.add_tensor("left", left.get()).add_tensor("right", right.get());
      return report.emit(as_json);
    }
    if (parsed("decompose")) {
      Handle ta = load(a);
      bt_tensor *l = nullptr, *r = nullptr;
      check(bt_search_space_decomposition(ta.get(), middle.data(), middle.size(),
                                          &l, &r));
      Handle left(l), right(r);
      if (!left) return Report("absent").add("middle", dims_text(middle)).emit(as_json);
      bt_tensor* g = nullptr;
      check(bt_g_inverse_from_decomposition(ta.get(), left.get(), right.get(), &g));
      Handle ginv(g);
      return Report(true)
          .add("middle", dims_text(middle))
          .add_tensor("left", left.get())
          .add_tensor("right", right.get())
          .add_tensor("g_inverse", ginv.get())
          .emit(as_json);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const Failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  std::cerr << "error: no verb given\n";
  return kExitError;
}
