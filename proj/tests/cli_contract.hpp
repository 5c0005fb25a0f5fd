#pragma once

// Runs the CLI binary against fixture files and checks output bytes and
// exit codes against direct library calls.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "boolten/decomposition.hpp"
#include "boolten/ginverse.hpp"
#include "boolten/residuation.hpp"
#include "boolten/tensor_io.hpp"
#include "support.hpp"

namespace cli_contract {

namespace fs = std::filesystem;
using boolten::Tensor;

struct Run {
  int exit_code = -1;
  std::string out;
};

inline Run run(const std::string& args) {
  const std::string cmd = std::string(BOOLTEN_CLI) + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

class Checker {
 public:
  explicit Checker(fs::path dir) : dir_(std::move(dir)) {
    fs::create_directories(dir_);
  }

  std::string put(const std::string& name, const Tensor& t) {
    const fs::path p = dir_ / (name + ".json");
    boolten::save_tensor(t, p);
    return p.string();
  }
  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  // Verb printing a tensor: stdout must equal the serializer's bytes.
  void tensor(const std::string& args, const Tensor& expected) {
    const Run r = run(args);
    expect(args, r.exit_code == 0, "exit " + std::to_string(r.exit_code));
    expect(args, r.out == boolten::to_json(expected), "output bytes differ");
    if (r.exit_code == 0) {
      expect(args, boolten::from_json(r.out) == expected, "round trip");
    }
  }

  // Verb printing a report: check exit status and the first line.
  void report(const std::string& args, int exit_code,
              const std::string& first_line) {
    const Run r = run(args);
    expect(args, r.exit_code == exit_code,
           "exit " + std::to_string(r.exit_code) + ", wanted " +
               std::to_string(exit_code));
    const std::string line = r.out.substr(0, r.out.find('\n'));
    expect(args, line == first_line, "first line '" + line + "'");
  }

  void status(const std::string& args, int exit_code) {
    const Run r = run(args);
    expect(args, r.exit_code == exit_code,
           "exit " + std::to_string(r.exit_code) + ", wanted " +
               std::to_string(exit_code));
  }

  void expect(const std::string& what, bool ok, const std::string& detail) {
    ++checks_;
    if (!ok) failures_.push_back(what + ": " + detail);
  }

  const std::vector<std::string>& failures() const { return failures_; }
  int checks() const { return checks_; }

 private:
  fs::path dir_;
  std::vector<std::string> failures_;
  int checks_ = 0;
};

// Full contract; returns the checker holding any failures.
inline Checker check_all(const fs::path& dir) {
  using namespace boolten;
  using testing_support::grid;
  Checker c(dir);

  const Tensor pa = testing_support::product_example_a();
  const Tensor pb = testing_support::product_example_b();
  const Tensor a = grid("10|10"), b = grid("11|01"), id = identity({2});
  const Tensor zero(Shape({2}, {2}));
  const Tensor perm = grid("01|10");
  Tensor singular;
  for (std::uint64_t v = 0;; ++v) {
    Tensor t(Shape({3}, {3}));
    for (std::size_t p = 0; p < 9; ++p) t.set(p / 3, p % 3, (v >> (8 - p)) & 1U);
    if (!is_regular(t)) {
      singular = t;
      break;
    }
  }
  const Tensor ga = testing_support::ginv_example_a();
  const Tensor gx = testing_support::ginv_example_x();
  const Tensor wm = testing_support::weight_example_m();
  const Tensor wz(Shape({2, 3}, {2, 3}));
  const Tensor bad_shape(Shape({3}, {2}));

  const std::string PA = c.put("pa", pa), PB = c.put("pb", pb), A = c.put("a", a),
                    B = c.put("b", b), ID = c.put("id", id), Z = c.put("zero", zero),
                    P = c.put("perm", perm), S = c.put("singular", singular),
                    GA = c.put("ga", ga), GX = c.put("gx", gx), WM = c.put("wm", wm),
                    WZ = c.put("wz", wz), BAD = c.put("bad_shape", bad_shape),
                    RA = c.put("rank_a", testing_support::rank_example_a());
  {
    std::ofstream broken(c.path("broken.json"));
    broken << "{\"row_dims\":[2],\"col_dims\":[2],\"bits\":\"10\"}";
  }

  // Tensor verbs.
  c.tensor("einsum " + PA + " " + PB, pa * pb);
  c.expect("einsum complement", complement(pa * pb) ==
                                    testing_support::six(testing_support::repeat("011|110", 6)),
           "complement slices");
  c.tensor("add " + A + " " + B, a + b);
  c.tensor("transpose " + A, transpose(a));
  c.tensor("complement " + A, complement(a));
  c.tensor("closure " + P, closure(perm));
  c.tensor("max-solution " + A + " " + B + " --side right", max_right_solution(a, b));
  c.tensor("max-solution " + A + " " + B + " --side left", max_left_solution(a, b));
  c.tensor("ginv-max " + B, max_g_inverse(b));
  c.tensor("ginv-reflexive " + B, max_reflexive_g_inverse(b));
  c.tensor("ginv-13 " + A, *one_three_inverse(a));
  c.tensor("ginv-14 " + A, *one_four_inverse(a));
  c.tensor("mp " + A, grid("11|00"));
  c.tensor("inverse " + P, perm);
  c.tensor("wmp " + A + " " + ID + " " + ID, transpose(a));

  // -o writes the same bytes and prints nothing.
  {
    const std::string out = c.path("out.json");
    const Run r = run("einsum " + A + " " + B + " -o " + out);
    c.expect("einsum -o", r.exit_code == 0 && r.out.empty(), "exit/stdout");
    c.expect("einsum -o", slurp(out) == to_json(a * b), "file bytes");
    const std::string twice = c.path("twice.json");
    run("transpose " + out + " -o " + twice);
    run("transpose " + twice + " -o " + twice);
    c.expect("transpose round trip", slurp(twice) == slurp(out), "bytes differ");
  }

  // Absent results.
  c.report("mp " + B, 1, "result: absent");
  c.report("inverse " + B, 1, "result: absent");
  c.report("ginv-reflexive " + S, 1, "result: absent");
  bool found13 = false;
  for (std::uint64_t v = 0; v < 512 && !found13; ++v) {
    Tensor t(Shape({3}, {3}));
    for (std::size_t p = 0; p < 9; ++p) t.set(p / 3, p % 3, (v >> (8 - p)) & 1U);
    if (!one_three_inverse(t)) {
      const std::string T = c.put("no13", t);
      c.report("ginv-13 " + T, 1, "result: absent");
      c.report("ginv-14 " + c.put("no14", transpose(t)), 1, "result: absent");
      found13 = true;
    }
  }
  c.expect("tensor without {1,3}-inverse", found13, "none found");
  c.report("wmp " + B + " " + ID + " " + ID, 1, "result: absent");

  // Report verbs.
  c.report("trace " + B, 0, "result: 2");
  c.report("weight " + RA, 0, "result: 3");
  c.report("classify " + ID, 0, "result: 5");
  c.report("leq " + A + " " + B, 1, "result: false");
  c.report("leq " + A + " " + c.put("ones", Tensor::ones(Shape({2}, {2}))), 0,
           "result: true");
  c.report("solve " + A + " " + A + " --side right", 0, "result: true");
  c.report("solve " + A + " " + c.put("e01", grid("01|00")) + " --side right", 1,
           "result: false");
  c.report("solve " + A + " " + A + " --side left", 0, "result: true");
  {
    const std::string out = c.path("solution.json");
    run("solve " + A + " " + A + " -o " + out);
    c.expect("solve -o", slurp(out) == to_json(grid("10|11")), "witness bytes");
  }
  c.report("range-subset " + Z + " " + A, 0, "result: true");
  c.report("range-subset " + ID + " " + A, 1, "result: false");
  c.report("check-axioms " + ID + " " + ID, 0, "result: true");
  c.report("check-axioms " + GA + " " + GX, 1, "result: false");
  c.report("check-axioms " + GA + " " + GX + " --weighted " + WM + " " + WZ, 0,
           "result: true");
  c.report("regular " + B, 0, "result: true");
  c.report("regular " + S, 1, "result: false");
  c.report("rank " + RA, 0, "result: 2");
  c.report("rank " + Z, 0, "result: 0");
  c.report("decompose " + A + " --middle 1", 0, "result: true");
  c.report("decompose " + ID + " --middle 1", 1, "result: absent");
  c.report("decompose " + ID + " --middle 1,2", 0, "result: true");
  c.report("experiment rank-regularity --shape 2x2", 0, "result: 16");
  {
    const Run r = run("rank " + RA + " --json");
    bool ok = false;
    try {
      const auto doc = nlohmann::json::parse(r.out);
      ok = doc.at("result") == 2 && r.exit_code == 0;
      if (ok) {
        const Tensor l = from_json(
            nlohmann::json{{"row_dims", {2, 2}}, {"col_dims", {2}},
                           {"bits", doc.at("left_bits")}}
                .dump());
        const Tensor rr = from_json(
            nlohmann::json{{"row_dims", {2}}, {"col_dims", {2, 2}},
                           {"bits", doc.at("right_bits")}}
                .dump());
        ok = l * rr == testing_support::rank_example_a();
      }
    } catch (const std::exception&) {
      ok = false;
    }
    c.expect("rank --json", ok, "bad JSON report");
  }

  // Errors and usage.
  c.status("wmp " + GA + " " + WM + " " + WZ, 2);
  c.status("einsum " + A + " " + BAD, 2);
  c.status("trace " + BAD, 2);
  c.status("mp " + c.path("missing.json"), 2);
  c.status("mp " + c.path("broken.json"), 2);
  c.status("mp " + A + " --bogus", 2);
  c.status("frobnicate " + A, 2);
  c.status("", 2);
  c.status("solve " + A + " " + A + " --side up", 2);
  c.status("decompose " + A + " --middle 9", 2);
  c.status("decompose " + A, 2);
  c.status("experiment rank-regularity --shape 5x5", 2);
  c.status("experiment rank-regularity --shape 2by2", 2);
  c.status("--help", 0);
  return c;
}

}  // namespace cli_contract
