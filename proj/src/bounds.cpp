#include "hampow/bounds.hpp"

#include <cmath>

namespace hampow {

namespace {

void require_rk(int r, int k, int min_r) {
  if (r < min_r)
    throw std::invalid_argument("need r >= " + std::to_string(min_r) + ", got " + std::to_string(r));
  if (k < 1) throw std::invalid_argument("need k >= 1");
}

double ln_factorial(long n) { return std::lgamma(static_cast<double>(n) + 1.0); }

}  // namespace

LogValue threshold_constant_C(int r, int k) {
  require_rk(r, k, 3);
  double binom = static_cast<double>(binom_u64(k + r - 2, r - 1));
  double ln = std::log(4.0) + 1.0 + 2.0 * std::log(static_cast<double>(r)) + std::log(binom) +
              (std::log(static_cast<double>(2 * k + 2 * r - 3)) + 1.0) / binom;
  return LogValue::from_ln(ln);
}

double constant_c(int r, int k) {
  require_rk(r, k, 2);
  return 2.0 * std::exp(1.0) * static_cast<double>(r) * static_cast<double>(r) *
         static_cast<double>(binom_u64(k + r - 2, r - 1));
}

LogValue constant_Cprime(int r, int k) {
  require_rk(r, k, 2);
  double base = static_cast<double>(2 * k + 2 * r - 3) * std::exp(2.0);
  return LogValue::from_ln(base * std::log(base));
}

Rational threshold_exponent(int r, int k) {
  require_rk(r, k, 2);
  Rational q(-1, binom_integer(k + r - 2, r - 1));
  q.canonicalize();
  return q;
}

Rational min_support_size(long b, long s, int r, int k) {
  require_rk(r, k, 2);
  if (s < 1 || s > b) throw std::invalid_argument("need 1 <= s <= b");
  Rational q(b, binom_integer(k + r - 2, r - 1));
  q.canonicalize();
  return q + Rational((r - 1) * s);
}

LogValue connected_count_bound(long b, int r, int k) {
  require_rk(r, k, 2);
  if (b < 1) throw std::invalid_argument("need b >= 1");
  double per_edge = 1.0 + 2.0 * std::log(static_cast<double>(r)) +
                    std::log(static_cast<double>(binom_u64(k + r - 2, r - 1)));
  return LogValue::from_ln(static_cast<double>(b) * per_edge);
}

LogValue subgraph_count_bound(int n, long b, long s, int r, int k) {
  require_rk(r, k, 2);
  if (s < 1 || s > b) throw std::invalid_argument("need 1 <= s <= b");
  if (n < 1) throw std::invalid_argument("need n >= 1");
  LogValue choices = LogValue::from_integer(binom_integer(n, s) * binom_integer(b - 1, s - 1));
  return choices * connected_count_bound(b, r, k);
}

LogValue extension_count_bound(int n, long v_p, long s, int r, int k) {
  require_rk(r, k, 2);
  if (s < 1) throw std::invalid_argument("need s >= 1");
  if (v_p < s) throw std::invalid_argument("need v_p >= s");
  if (n < v_p) throw std::invalid_argument("need n >= v_p");
  double ln = ln_factorial(n - v_p + s - 1) +
              static_cast<double>(v_p - s) * std::log(static_cast<double>(2 * k + 2 * r - 4)) -
              std::log(2.0);
  return LogValue::from_ln(ln);
}

GeometricMajorant overlap_sum_majorant(int n, int r, int k, double c_factor) {
  require_rk(r, k, 2);
  if (c_factor <= 0) throw std::invalid_argument("need a positive constant factor");
  if (n < 0) throw std::invalid_argument("need n >= 0");
  double binom = static_cast<double>(binom_u64(k + r - 2, r - 1));
  long m = static_cast<long>(binom) * n;
  double rho = 2.0 * constant_c(r, k) *
               std::exp((std::log(static_cast<double>(2 * k + 2 * r - 3)) + 1.0) / binom) /
               c_factor;
  LogValue cprime = constant_Cprime(r, k);
  double ln_half_rho = std::log(rho) - std::log(2.0);
  LogValue sum = LogValue::zero();
  for (long b = 1; b <= m; ++b)
    sum = sum + LogValue::from_ln(std::log(static_cast<double>(b)) +
                                  static_cast<double>(b) * ln_half_rho);
  return GeometricMajorant{cprime * sum, rho, rho <= 1.0, m};
}

EstimateReport verify_standard_estimates(long n_max) {
  if (n_max < 1) throw std::invalid_argument("need n_max >= 1");
  EstimateReport report;
  report.n_max = n_max;
  for (long n = 1; n <= n_max; ++n) {
    double ln_n = std::log(static_cast<double>(n));
    double lhs = ln_factorial(n);
    double rhs = static_cast<double>(n) * (ln_n - 1.0);
    ++report.checks_run;
    if (lhs < rhs) report.violations.push_back({n, 0, lhs, rhs});
    for (long x = 1; x <= n; ++x) {
      double ratio = ln_factorial(n - x) - ln_factorial(n);
      double bound = static_cast<double>(x) * (1.0 - ln_n);
      ++report.checks_run;
      if (ratio > bound) report.violations.push_back({n, x, ratio, bound});
    }
  }
  return report;
}

double pz_lower_bound(double ex, double ex2) {
  if (ex < 0) throw std::invalid_argument("E[X] must be nonnegative");
  if (ex2 <= 0) throw std::invalid_argument("E[X^2] must be positive");
  if (ex * ex > ex2)
    throw std::invalid_argument("E[X]^2 > E[X^2] violates Cauchy-Schwarz; upstream bug");
  return ex * ex / ex2;
}

Rational pz_lower_bound(const Rational& ex, const Rational& ex2) {
  if (ex < 0) throw std::invalid_argument("E[X] must be nonnegative");
  if (ex2 <= 0) throw std::invalid_argument("E[X^2] must be positive");
  Rational sq = ex * ex;
  if (sq > ex2)
    throw std::invalid_argument("E[X]^2 > E[X^2] violates Cauchy-Schwarz; upstream bug");
  return sq / ex2;
}

}  // namespace hampow
