#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hampow/cyclic.hpp"
#include "hampow/hypergraph.hpp"
#include "hampow/search.hpp"

namespace hampow {

// Binomial random r-graph with a counter-based stream: the draw for a given
// r-set depends only on (seed, trial_index, lexicographic rank), never on p,
// so samples at p1 <= p2 are nested edge sets.
Hypergraph sample_random_hypergraph(int n, int r, double p, std::uint64_t seed,
                                    std::uint64_t trial_index);

struct ScanConfig {
  PowerCycleParams params;
  std::vector<double> c_grid;  // strictly increasing, positive
  long trials = 100;
  std::uint64_t seed = 0;
  double timeout_seconds = 30.0;
  int workers = 1;
};

struct ScanPoint {
  double c = 0.0;
  double p = 0.0;
  bool p_clamped = false;  // C n^(-1/binom) exceeded 1
  long trials = 0;
  long successes = 0;
  long timeouts = 0;
  double p_hat = 0.0;              // successes / trials (timeouts count as failures)
  double std_err = 0.0;            // sqrt(p_hat (1-p_hat) / trials)
  double p_hat_optimistic = 0.0;   // (successes + timeouts) / trials
};

// One scan point per C with p = min(1, C n^(-1/binom(k+r-2,r-1))). Trial t
// reuses the same draw stream at every grid point, so successes are exactly
// nondecreasing in C (absent timeouts). Output is identical for any worker
// count.
std::vector<ScanPoint> run_scan(const ScanConfig& config);

// Monte Carlo estimate at a fixed p, same trial streams as run_scan.
ScanPoint estimate_containment(const PowerCycleParams& params, double p, long trials,
                               std::uint64_t seed, double timeout_seconds = 30.0, int workers = 1);

void write_scan_csv(std::ostream& out, const ScanConfig& config,
                    const std::vector<ScanPoint>& points);

std::vector<double> parse_c_grid(const std::string& spec);  // "LO:HI:STEP"

}  // namespace hampow
