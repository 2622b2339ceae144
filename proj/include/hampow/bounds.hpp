#pragma once

#include <vector>

#include "hampow/numeric.hpp"

namespace hampow {

// Explicit containment-threshold constant
//   C(r,k) = 4 e r^2 binom(k+r-2, r-1) ((2k+2r-3) e)^(1/binom(k+r-2, r-1)).
// Defined for r >= 3 only; the second-moment machinery breaks at r = 2.
LogValue threshold_constant_C(int r, int k);

// c(r,k) = 2 e r^2 binom(k+r-2, r-1)
double constant_c(int r, int k);

// C'(r,k) = ((2k+2r-3) e^2) ^ ((2k+2r-3) e^2); around e^133 already at (3,1).
LogValue constant_Cprime(int r, int k);

// Threshold scaling exponent: p ~ n^(-1/binom(k+r-2, r-1)).
Rational threshold_exponent(int r, int k);

// Minimum vertex support of a subhypergraph of a power cycle with b edges
// and s components: b / binom(k+r-2, r-1) + (r-1) s.
Rational min_support_size(long b, long s, int r, int k);

// Connected subhypergraphs through a fixed vertex with b edges:
// at most (e r^2 binom(k+r-2, r-1))^b.
LogValue connected_count_bound(long b, int r, int k);

// Subhypergraphs with b edges and s components:
// at most binom(n,s) binom(b-1,s-1) (e r^2 binom(k+r-2,r-1))^b.
LogValue subgraph_count_bound(int n, long b, long s, int r, int k);

// Cyclic orderings extending a fixed subhypergraph with v_p support vertices
// and s components: at most (n - v_p + s - 1)! (2k+2r-4)^(v_p - s) / 2.
LogValue extension_count_bound(int n, long v_p, long s, int r, int k);

// The geometric majorant that dominates sum_b N(b) p^-b / |Q_n| when
// p = Cfactor * n^(-1/binom): C' * sum_{b=1..m} b * (rho/2)^b with
// rho = 2 c ((2k+2r-3) e)^(1/binom) / Cfactor.
struct GeometricMajorant {
  LogValue value;
  double rho;              // per-edge base ratio before the 2^-b damping
  bool domination_holds;   // rho <= 1, i.e. Cfactor meets the constant
  long terms;              // m
};
GeometricMajorant overlap_sum_majorant(int n, int r, int k, double c_factor);

// Checks n! >= (n/e)^n and (n-x)!/n! <= (e/n)^x for 1 <= x <= n <= n_max.
struct EstimateViolation {
  long n;
  long x;  // 0 for the factorial inequality
  double lhs_ln;
  double rhs_ln;
};
struct EstimateReport {
  long n_max = 0;
  long checks_run = 0;
  std::vector<EstimateViolation> violations;
};
EstimateReport verify_standard_estimates(long n_max);

// Second-moment lower bound P(X>0) >= E[X]^2 / E[X^2].
double pz_lower_bound(double ex, double ex2);
Rational pz_lower_bound(const Rational& ex, const Rational& ex2);

}  // namespace hampow
