#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "boolten/decomposition.hpp"
#include "boolten/error.hpp"
#include "boolten/ginverse.hpp"
#include "boolten/oracle.hpp"
#include "support.hpp"

using namespace boolten;
using testing_support::grid;

TEST_CASE("enumeration is exhaustive, ordered and duplicate free") {
  const TensorEnumeration all = enumerate_tensors(Shape({2}, {2}));
  CHECK(all.size() == 16);
  std::set<std::string> seen;
  std::string previous;
  for (const Tensor& t : all) {
    const std::string bits = t.bit_string();
    if (!previous.empty()) CHECK(previous < bits);
    previous = bits;
    seen.insert(bits);
  }
  CHECK(seen.size() == 16);
  CHECK((*all.begin()).is_zero());
  CHECK(previous == "1111");

  const TensorEnumeration vectors = enumerate_tensors(Shape({3}, {}));
  CHECK(vectors.size() == 8);
  CHECK((*vectors.begin()).shape() == Shape({3}, {}));
}

TEST_CASE("enumeration cap") {
  CHECK(enumerate_tensors(Shape({4}, {6})).size() == (1U << 24));
  try {
    enumerate_tensors(Shape({5}, {5}));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::resource);
  }
}

TEST_CASE("brute_g_inverses") {
  const auto id = brute_g_inverses(identity({2}));
  REQUIRE(id.size() == 1);
  CHECK(id.front() == identity({2}));
  CHECK(brute_g_inverses(Tensor(Shape({2}, {2}))).size() == 16);
  CHECK(brute_g_inverses(grid("10|10")).size() == 12);
  // Non-square input enumerates the transposed shape.
  for (const Tensor& x : brute_g_inverses(grid("101|010"))) {
    CHECK(x.shape() == Shape({3}, {2}));
  }
}

TEST_CASE("brute solvability") {
  CHECK(brute_right_solvable(grid("10|10"), grid("10|10")));
  CHECK_FALSE(brute_right_solvable(grid("10|10"), grid("01|00")));
  CHECK(brute_left_solvable(grid("10|10"), grid("10|10")));
  CHECK_FALSE(brute_left_solvable(grid("11|00"), grid("10|01")));
  CHECK_THROWS_AS(brute_right_solvable(grid("10|10"), grid("1")), Error);
  CHECK(brute_range_subset(Tensor(Shape({2}, {2})), grid("10|10")));
}

TEST_CASE("brute space decompositions") {
  const auto all = brute_space_decompositions(grid("10|10"), {1});
  REQUIRE(all.size() == 1);
  CHECK(all.front().left == grid("1|1"));
  CHECK(all.front().right == grid("10"));
  CHECK(brute_space_decompositions(identity({2}), {1}).empty());
  // Permuting the middle index gives a second identity decomposition.
  CHECK(brute_space_decompositions(identity({2}), {2}).size() == 2);
}

TEST_CASE("brute_boolean_rank") {
  CHECK(brute_boolean_rank(Tensor(Shape({2}, {2}))) == 0);
  CHECK(brute_boolean_rank(identity({3})) == 3);
  CHECK(brute_boolean_rank(testing_support::rank_example_a()) == 2);
  CHECK(brute_boolean_rank(complement(identity({4}))) == 4);
  CHECK_THROWS_AS(brute_boolean_rank(identity({5})), Error);
}

TEST_CASE("rectangle search agrees with brute rank on sampled 4x4") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(0, (1U << 16) - 1);
  const TensorEnumeration all = enumerate_tensors(Shape({4}, {4}));
  for (int trial = 0; trial < 300; ++trial) {
    const Tensor a = *TensorEnumeration::iterator(&all.shape(), pick(rng));
    CHECK(boolean_rank(a).rank == brute_boolean_rank(a));
  }
}

TEST_CASE("oracle agreement on ([2,2],[2]) pairs") {
  const auto as = enumerate_tensors(Shape({2, 2}, {2}));
  const auto xs = enumerate_tensors(Shape({2}, {2, 2}));
  for (const Tensor& a : as) {
    const Tensor g = max_g_inverse(a);
    bool any = false;
    for (const Tensor& x : xs) {
      const bool ax1 = a * x * a == a;
      CHECK(check_g_axioms(a, x).ax1 == ax1);
      if (ax1) {
        any = true;
        CHECK(leq(x, g));
      }
    }
    CHECK(is_regular(a) == any);
  }
}
