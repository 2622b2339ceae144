#include <doctest.h>

#include <cmath>

#include "hampow/bounds.hpp"

using namespace hampow;

namespace {

// relative agreement to 12 significant digits
void check_close(double actual, double expected) {
  CHECK(std::abs(actual - expected) <= 1e-12 * std::abs(expected));
}

}  // namespace

TEST_CASE("threshold constant") {
  check_close(threshold_constant_C(3, 1).to_double(), 1330.0300978075170409);  // 180 e^2
  check_close(threshold_constant_C(3, 1).ln(), 7.1929568508902103762);
  check_close(threshold_constant_C(3, 2).to_double(), 783.75876618476848712);  // 108 e (7e)^(1/3)
  check_close(threshold_constant_C(4, 2).to_double(), 1547.6355425700162259);
  CHECK_THROWS_AS(threshold_constant_C(2, 1), std::invalid_argument);  // needs r >= 3
  CHECK_THROWS_AS(threshold_constant_C(3, 0), std::invalid_argument);
}

TEST_CASE("auxiliary constants") {
  check_close(constant_c(3, 1), 48.929072912262814236);  // 18 e
  check_close(constant_c(2, 1), 21.746254627672361883);  // 8 e
  check_close(constant_c(3, 2), 146.78721873678844271);  // 54 e
  check_close(constant_Cprime(3, 1).ln(), 133.35169610291351805);  // 5e^2 ln(5e^2)
  check_close(constant_Cprime(3, 2).ln(), 204.09586016896659725);  // 7e^2 ln(7e^2)
}

TEST_CASE("threshold exponent is an exact rational") {
  CHECK(threshold_exponent(3, 2) == Rational(-1, 3));
  CHECK(threshold_exponent(3, 1) == Rational(-1));
  CHECK(threshold_exponent(4, 1) == Rational(-1));
  CHECK(threshold_exponent(4, 3) == Rational(-1, 10));
}

TEST_CASE("minimum support size") {
  CHECK(min_support_size(1, 1, 3, 1) == Rational(3));
  CHECK(min_support_size(3, 1, 3, 2) == Rational(3));  // 3/3 + 2
  CHECK(min_support_size(2, 2, 3, 1) == Rational(6));
  CHECK(min_support_size(4, 1, 3, 2) == Rational(4, 3) + 2);
  CHECK_THROWS_AS(min_support_size(1, 2, 3, 1), std::invalid_argument);  // s > b
}

TEST_CASE("connected-count bound") {
  check_close(connected_count_bound(1, 3, 1).to_double(), 24.464536456131407118);  // 9e
  check_close(connected_count_bound(2, 3, 1).to_double(), 598.51354401338266841);  // (9e)^2
  CHECK(connected_count_bound(1, 3, 1) < connected_count_bound(2, 3, 1));
  CHECK_THROWS_AS(connected_count_bound(0, 3, 1), std::invalid_argument);
}

TEST_CASE("(b,s) census bound") {
  check_close(subgraph_count_bound(8, 1, 1, 3, 1).to_double(), 195.71629164905125695);
  check_close(subgraph_count_bound(8, 2, 1, 3, 1).to_double(), 4788.1083521070613472);
  CHECK_THROWS_AS(subgraph_count_bound(8, 1, 2, 3, 1), std::invalid_argument);
}

TEST_CASE("extension bound") {
  // single edge: (n-v+s-1)! (2k+2r-4)^(v-s) / 2 = 4! * 4^2 / 2
  check_close(extension_count_bound(7, 3, 1, 3, 1).to_double(), 192.0);
  // degenerate exponent: collapses to (n-1)!/2
  check_close(extension_count_bound(7, 2, 2, 3, 1).to_double(), 360.0);
  CHECK_THROWS_AS(extension_count_bound(7, 1, 2, 3, 1), std::invalid_argument);  // v_p < s
  CHECK_THROWS_AS(extension_count_bound(2, 3, 1, 3, 1), std::invalid_argument);  // n < v_p
}

TEST_CASE("geometric majorant for the overlap sum") {
  double c_threshold = threshold_constant_C(3, 1).to_double();
  auto at_threshold = overlap_sum_majorant(8, 3, 1, c_threshold);
  CHECK(at_threshold.rho == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(at_threshold.domination_holds);
  CHECK(at_threshold.terms == 8);

  // with rho = 1 the sum is exactly C' * sum b/2^b over b = 1..m
  double partial = 0;
  for (int b = 1; b <= 8; ++b) partial += b / std::pow(2.0, b);
  check_close(at_threshold.value.ln(), constant_Cprime(3, 1).ln() + std::log(partial));

  auto at_10x = overlap_sum_majorant(8, 3, 1, 10 * c_threshold);
  CHECK(at_10x.value < at_threshold.value);
  CHECK(at_10x.domination_holds);

  auto below = overlap_sum_majorant(8, 3, 1, 0.5 * c_threshold);
  CHECK(!below.domination_holds);

  CHECK(overlap_sum_majorant(0, 3, 1, c_threshold).value.is_zero());  // empty range
  CHECK_THROWS_AS(overlap_sum_majorant(8, 3, 1, 0.0), std::invalid_argument);
}

TEST_CASE("standard estimates never fail") {
  EstimateReport small = verify_standard_estimates(100);
  CHECK(small.violations.empty());
  CHECK(small.checks_run == 100 + (100 * 101) / 2);

  EstimateReport one = verify_standard_estimates(1);  // 1! >= 1/e and 0!/1! <= e
  CHECK(one.violations.empty());
  CHECK_THROWS_AS(verify_standard_estimates(0), std::invalid_argument);
}

TEST_CASE("second-moment lower bound") {
  CHECK(pz_lower_bound(1.0, 1.0) == 1.0);
  CHECK(pz_lower_bound(0.0, 5.0) == 0.0);
  CHECK_THROWS_AS(pz_lower_bound(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(pz_lower_bound(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(pz_lower_bound(1.0, 0.0), std::invalid_argument);

  Rational expected(2025 * 8, 69795);
  expected.canonicalize();
  CHECK(pz_lower_bound(Rational(45, 16), Rational(69795, 2048)) == expected);
  Rational in01 = pz_lower_bound(Rational(1, 3), Rational(1, 2));
  CHECK(in01 >= 0);
  CHECK(in01 <= 1);
}

TEST_CASE("log-domain values") {
  CHECK(LogValue::zero().is_zero());
  CHECK(LogValue::from_value(0.0).is_zero());
  CHECK((LogValue::zero() + LogValue::from_value(2.0)).to_double() == doctest::Approx(2.0));
  CHECK((LogValue::from_value(2.0) * LogValue::from_value(3.0)).to_double() ==
        doctest::Approx(6.0));
  CHECK((LogValue::from_value(8.0) / LogValue::from_value(2.0)).to_double() ==
        doctest::Approx(4.0));
  CHECK(LogValue::from_value(2.0).pow(10).to_double() == doctest::Approx(1024.0));
  CHECK(LogValue::zero().pow(3.0).is_zero());
  CHECK(LogValue::zero().pow(0.0).ln() == 0.0);
  CHECK(LogValue::from_integer(Integer(1) << 200).ln() ==
        doctest::Approx(200 * std::log(2.0)).epsilon(1e-12));
  CHECK(LogValue::from_value(1.0) < LogValue::from_value(2.0));
  CHECK_THROWS_AS(LogValue::from_value(-1.0), std::invalid_argument);
}
