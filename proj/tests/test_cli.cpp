#include <doctest.h>

#include <filesystem>

#include "cli_contract.hpp"

TEST_CASE("cli contract") {
  const auto dir = std::filesystem::temp_directory_path() / "boolten_cli_test";
  const cli_contract::Checker c = cli_contract::check_all(dir);
  for (const auto& f : c.failures()) FAIL_CHECK(f);
  CHECK(c.checks() > 60);
  std::filesystem::remove_all(dir);
}

TEST_CASE("einsum and mp examples") {
  using cli_contract::run;
  const std::string data = BOOLTEN_TEST_DATA;
  const auto product = run("einsum " + data + "/product_a.json " + data +
                           "/product_b.json");
  CHECK(product.exit_code == 0);
  const auto x = boolten::complement(boolten::from_json(product.out));
  CHECK(boolten::to_json(x) == cli_contract::slurp(data + "/product_x.json"));

  const auto present = run("mp " + data + "/mp_present.json");
  CHECK(present.exit_code == 0);
  CHECK(present.out == "{\"row_dims\":[2],\"col_dims\":[2],\"bits\":\"1100\"}\n");
  const auto absent = run("mp " + data + "/mp_absent.json");
  CHECK(absent.exit_code == 1);
  CHECK(absent.out == "result: absent\n");
}
