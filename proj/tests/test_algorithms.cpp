#include <doctest.h>

#include <cmath>
#include <random>

#include "djsim/algorithms.hpp"
#include "test_util.hpp"

using namespace djsim;

namespace {

std::vector<TruthTable> promise_tables(int n) {
  std::vector<TruthTable> out{constant_table(n, 0), constant_table(n, 1)};
  for (auto& tt : enumerate_balanced(n)) out.push_back(std::move(tt));
  return out;
}

std::vector<TruthTable> all_tables(int n) {
  std::vector<TruthTable> out;
  const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    TruthTable tt;
    tt.n = n;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      tt.values.push_back((bits >> x) & 1u);
    }
    out.push_back(std::move(tt));
  }
  return out;
}

}  // namespace

TEST_CASE("refined algorithm on constants") {
  for (int v : {0, 1}) {
    const auto r = refined_dj(constant_table(3, v));
    CHECK(std::abs(*r.p_zero - 1.0) < 1e-12);
    CHECK(r.decision == Decision::Constant);
    CHECK(r.value_queries == 1);
  }
}

TEST_CASE("refined algorithm on all balanced tables at N=3") {
  for (const auto& tt : enumerate_balanced(3)) {
    const auto r = refined_dj(tt);
    CHECK(std::abs(*r.p_zero) < 1e-12);
    CHECK(r.decision == Decision::Balanced);
  }
}

TEST_CASE("refined algorithm on a promise violation") {
  const auto tt = parse_truth_table("1000");
  // Independent integer oracle: p_zero = (sum_x (-1)^{f(x)} / 2^N)^2 = 1/4.
  const auto exact = refined_dj_exact(tt);
  CHECK(exact.sign_sum == 2);
  CHECK(exact.numerator == 4);
  CHECK(exact.denominator == 16);
  CHECK(std::abs(*refined_dj(tt).p_zero - 0.25) < 1e-12);
  CHECK(refined_dj(tt, /*strict=*/true).decision == Decision::PromiseViolated);
  CHECK(refined_dj(tt, /*strict=*/false).decision != Decision::PromiseViolated);
}

TEST_CASE("exact probability") {
  CHECK(refined_dj_exact(constant_table(3, 0)).value() == 1.0);
  CHECK(refined_dj_exact(constant_table(3, 1)).value() == 1.0);
  for (const auto& tt : enumerate_balanced(3)) {
    CHECK(refined_dj_exact(tt).value() == 0.0);
  }
}

TEST_CASE("existing algorithm matches refined on every table at N <= 2") {
  for (int n = 1; n <= 2; ++n) {
    for (const auto& tt : all_tables(n)) {
      const auto ex = existing_dj(tt);
      const auto re = refined_dj(tt);
      CHECK(std::abs(*ex.p_zero - *re.p_zero) < 1e-12);
      CHECK(*ex.product_check == 1);
    }
  }
}

TEST_CASE("existing algorithm on constant f=1 at N=2") {
  const auto r = existing_dj(constant_table(2, 1));
  CHECK(std::abs(*r.p_zero - 1.0) < 1e-12);
  CHECK(r.decision == Decision::Constant);
}

TEST_CASE("existing algorithm product check on balanced N=3") {
  for (const auto& tt : enumerate_balanced(3)) {
    CHECK(*existing_dj(tt).product_check == 1);
  }
}

TEST_CASE("equivalence on sampled tables at N=4") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const TruthTable tt = testutil::random_table(4, rng);
    const auto ex = existing_dj(tt);
    const auto re = refined_dj(tt);
    CHECK(std::abs(*ex.p_zero - *re.p_zero) < 1e-12);
    CHECK(*ex.product_check == 1);
  }
}

TEST_CASE("classical naive") {
  const auto c = classical_naive(constant_table(3, 1));
  CHECK(c.decision == Decision::Constant);
  CHECK(c.value_queries == 5);

  const auto b = classical_naive(parse_truth_table("0110"));
  CHECK(b.decision == Decision::Balanced);
  CHECK(b.value_queries == 2);

  // N=1 worst case: both tables where f(0) = f(1) would need checking, and a
  // balanced table is found at the second query.
  CHECK(classical_naive(parse_truth_table("01")).value_queries == 2);
  CHECK(classical_naive(constant_table(1, 0)).value_queries == 2);
}

TEST_CASE("classical parity") {
  CHECK(classical_parity(parse_truth_table("01")).parity_queries == 1);
  CHECK(classical_parity(constant_table(1, 0)).parity_queries == 1);

  for (const auto& tt : promise_tables(2)) {
    CHECK(classical_parity(tt).parity_queries <= 2);
  }

  const auto c = classical_parity(constant_table(3, 0));
  CHECK(c.decision == Decision::Constant);
  CHECK(c.parity_queries == 4);
}

TEST_CASE("all four methods agree on every promise table at N <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& tt : promise_tables(n)) {
      const Decision expected =
          classify(tt) == FunctionClass::Balanced ? Decision::Balanced : Decision::Constant;
      CHECK(refined_dj(tt, true).decision == expected);
      CHECK(existing_dj(tt, true).decision == expected);
      CHECK(classical_naive(tt).decision == expected);
      CHECK(classical_parity(tt).decision == expected);

      // Exact path gives p_zero in {0, 1}; float pipeline tracks it.
      const auto exact = refined_dj_exact(tt);
      CHECK((exact.value() == 0.0 || exact.value() == 1.0));
      CHECK(std::abs(*refined_dj(tt).p_zero - exact.value()) < 1e-10);
    }
  }
}

TEST_CASE("query bounds") {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 3; ++n) {
    const int naive_cap = (1 << (n - 1)) + 1;
    const int parity_cap = 1 << (n - 1);
    for (const auto& tt : promise_tables(n)) {
      CHECK(classical_naive(tt).value_queries <= naive_cap);
      CHECK(classical_parity(tt).parity_queries <= parity_cap);
      if (classify(tt) != FunctionClass::Balanced) {
        CHECK(classical_naive(tt).value_queries == naive_cap);
      }
    }
    for (int trial = 0; trial < 20; ++trial) {
      const TruthTable tt = testutil::random_table(n, rng);
      CHECK(classical_naive(tt).value_queries <= naive_cap);
      CHECK(classical_parity(tt).parity_queries <= parity_cap);
    }
  }
}

TEST_CASE("product check holds even off the promise") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const TruthTable tt = testutil::random_table(1 + static_cast<int>(rng() % 3), rng);
    CHECK(*existing_dj(tt).product_check == 1);
  }
}
