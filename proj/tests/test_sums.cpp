#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>

#include "dsum/errors.hpp"
#include "dsum/real.hpp"
#include "dsum/sums.hpp"

using namespace dsum;

TEST_CASE("alpha literals") {
  Alpha two = Alpha::parse("2");
  CHECK(two.is_integer);
  CHECK(two.integer_value == 2);
  CHECK(Alpha::parse("2.000").is_integer);
  CHECK(Alpha::parse("2.000").integer_value == 2);
  CHECK_FALSE(Alpha::parse("0.5").is_integer);
  CHECK_FALSE(Alpha::parse("2.0000000001").is_integer);
  CHECK(Alpha::parse("0.5").approx() == 0.5);
  CHECK_THROWS_AS(Alpha::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(Alpha::parse("0.0"), std::invalid_argument);
  CHECK_THROWS_AS(Alpha::parse("-1"), std::invalid_argument);
  CHECK_THROWS_AS(Alpha::parse("2."), std::invalid_argument);
  CHECK_THROWS_AS(Alpha::parse(".5"), std::invalid_argument);
  CHECK_THROWS_AS(Alpha::parse("1e3"), std::invalid_argument);
  CHECK(Alpha::parse("0.5").value(128).to_double() == 0.5);
}

TEST_CASE("exact sums: known values") {
  CHECK(t_sum_exact({1, 2, Alpha::integer(2), 3}) == 5);   // 1^2 + 2^2, Catalan C_3
  CHECK(t_sum_exact({2, 2, Alpha::integer(1), 2}) == 3);   // shapes (2,2) and (1^4)
  CHECK(t_sum_exact({2, 2, Alpha::integer(1), 3}) == 14);  // 5 + 9
  for (std::uint32_t d : {1u, 2u, 3u})
    for (std::uint32_t s : {1u, 2u, 4u})
      CHECK(t_sum_exact({d, s, Alpha::integer(3), 1}) == 1);  // single shape (1^d)
}

TEST_CASE("real sums: known values") {
  Real v = t_sum_real({1, 2, Alpha::parse("2.0"), 3}, 128);
  CHECK(rel_diff(v, Real::from_ui(5, 128)) < std::ldexp(1.0, -50));

  Real one = t_sum_real({1, 1, Alpha::parse("0.5"), 7}, 128);
  CHECK(rel_diff(one, Real::one(128)) < std::ldexp(1.0, -50));

  // shapes (2,2) and (1^4) with counts 2 and 1: sum = sqrt(2) + 1
  Real v2 = t_sum_real({2, 2, Alpha::parse("0.5"), 2}, 256);
  Real expected = sqrt(Real::from_ui(2, 256)) + Real::one(256);
  CHECK(rel_diff(v2, expected) < std::ldexp(1.0, -200));
}

TEST_CASE("real sums track an error budget") {
  Real v = t_sum_real({1, 3, Alpha::parse("1.5"), 12}, 256);
  CHECK(v.error_budget() > 0.0);
  CHECK(v.error_budget() < 1e-60);
}

TEST_CASE("precision below 64 bits is rejected") {
  CHECK_THROWS_AS(t_sum_real({1, 2, Alpha::parse("0.5"), 3}, 32), std::invalid_argument);
}

TEST_CASE("monotone in s") {
  for (std::uint32_t d : {1u, 2u}) {
    ExactCount prev = 0;
    for (std::uint32_t s = 1; s <= 6; ++s) {
      ExactCount cur = t_sum_exact({d, s, Alpha::integer(1), 8});
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("exact and real paths agree for integer alpha") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::uint32_t d = 1 + rng() % 3;
    std::uint32_t s = 1 + rng() % 4;
    std::uint64_t m = 1 + rng() % (30 / d);
    unsigned long a = 1 + rng() % 3;
    SumQuery q{d, s, Alpha::integer(a), m};
    ExactCount exact = t_sum_exact(q);
    Real real = t_sum_real(q, 192);
    CHECK(rel_diff(real, Real::from_integer(exact, 192)) < std::ldexp(1.0, -96));
  }
}

TEST_CASE("parallel evaluation is bit-identical to serial") {
  SumQuery q{2, 3, Alpha::integer(2), 18};
  SumOptions serial{1e6, 1, 8};
  SumOptions parallel{1e6, 4, 8};
  CHECK(t_sum_exact(q, serial) == t_sum_exact(q, parallel));

  SumQuery qr{1, 4, Alpha::parse("0.5"), 24};
  Real a = t_sum_real(qr, 256, serial);
  Real b = t_sum_real(qr, 256, parallel);
  CHECK(mpfr_equal_p(a.raw(), b.raw()));
  CHECK(a.to_string(60) == b.to_string(60));
}

TEST_CASE("budget guard refuses oversized families") {
  SumQuery q{1, 40, Alpha::integer(1), 5000};
  CHECK_THROWS_AS(t_sum_exact(q), BudgetError);
  try {
    t_sum_exact(q);
  } catch (const BudgetError& e) {
    CHECK(e.estimated_cost() > e.budget());
    CHECK(std::string(e.what()).find("budget") != std::string::npos);
  }
}

TEST_CASE("per-shape guards surface cleanly through worker threads") {
  // one shape, but too many cells for the hook evaluation
  SumQuery q{1, 1, Alpha::integer(1), 25'000'000};
  SumOptions parallel{1e6, 4, 8};
  CHECK_THROWS_AS(t_sum_exact(q, parallel), BudgetError);
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS(t_sum_exact({0, 1, Alpha::integer(1), 1}), std::invalid_argument);
  CHECK_THROWS_AS(t_sum_exact({1, 0, Alpha::integer(1), 1}), std::invalid_argument);
  CHECK_THROWS_AS(t_sum_exact({1, 1, Alpha::integer(1), 0}), std::invalid_argument);
  CHECK_THROWS_AS(t_sum_exact({1, 2, Alpha::parse("0.5"), 3}), std::invalid_argument);
}
