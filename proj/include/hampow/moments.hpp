#pragma once

#include <optional>
#include <vector>

#include "hampow/enumeration.hpp"
#include "hampow/numeric.hpp"

namespace hampow {

// Exact second-moment data for the count X of power cycles appearing in the
// binomial random hypergraph. All fields are exact rationals.
struct MomentReport {
  PowerCycleParams params;
  Rational p;
  Rational ex;                          // |Q_n| p^m
  Rational ex2;                         // |Q_n| sum_b N(b) p^(2m-b)
  std::optional<Rational> ratio;        // ex2 / ex^2; absent when ex = 0
  std::optional<Rational> overlap_sum;  // sum_{b>=1} N(b) p^-b / |Q_n|; absent at p = 0
};

Rational expected_count(const PowerCycleParams& params, const Rational& p);

// Computes the overlap histogram for the identity ordering and assembles the
// report. By default it recomputes the histogram for one pseudorandom
// ordering and insists the two agree (relabeling symmetry); a mismatch means
// a bug, reported as logic_error.
MomentReport second_moment_exact(const PowerCycleParams& params, const Rational& p,
                                 const QnSweepOptions& opts = {},
                                 bool recheck_sigma_independence = true);

// Same assembly from a histogram the caller already has.
MomentReport second_moment_from_histogram(const PowerCycleParams& params, const Rational& p,
                                          const OverlapHistogram& hist);

// Popcount-indexed census of edge sets containing at least one power cycle,
// over all 2^binom(n,r) subsets of the complete r-graph.
struct ContainmentTable {
  PowerCycleParams params;
  long total_rsets = 0;
  std::vector<Integer> contains_by_popcount;  // index = subset size
  long distinct_cycle_masks = 0;
};

inline constexpr long kDefaultRsetGuard = 20;

// The 2^binom(n,r) mask sweep is split into contiguous ranges over workers;
// the merged census is identical for any worker count.
ContainmentTable build_containment_table(const PowerCycleParams& params,
                                         long guard_max_rsets = kDefaultRsetGuard,
                                         int workers = 1);

Rational containment_probability(const ContainmentTable& table, const Rational& p);

struct ExactProbabilityReport {
  PowerCycleParams params;
  Rational p;
  Rational prob_contains;  // exact P(X > 0)
  Rational pz_bound;       // E[X]^2 / E[X^2], zero when E[X^2] = 0
};

ExactProbabilityReport exact_containment_probability(const PowerCycleParams& params,
                                                     const Rational& p,
                                                     long guard_max_rsets = kDefaultRsetGuard,
                                                     const QnSweepOptions& opts = {});

// Shared-table variant for sweeping several p values.
ExactProbabilityReport exact_containment_probability(const ContainmentTable& table,
                                                     const Rational& p,
                                                     const QnSweepOptions& opts = {});

}  // namespace hampow
