#include "hampow/random_lab.hpp"

#include <atomic>
#include <cmath>
#include <ostream>
#include <sstream>
#include <thread>

#include "hampow/enumeration.hpp"

namespace hampow {

Hypergraph sample_random_hypergraph(int n, int r, double p, std::uint64_t seed,
                                    std::uint64_t trial_index) {
  if (r < 2 || n < r) throw std::invalid_argument("sample: need n >= r >= 2");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample: p must lie in [0,1]");
  std::vector<Edge> edges;
  std::uint64_t rank = 0;
  for_each_combination(static_cast<std::size_t>(n), static_cast<std::size_t>(r),
                       [&](const std::vector<std::size_t>& pick) {
                         if (counter_uniform(seed, trial_index, rank++) < p) {
                           Edge e;
                           e.reserve(pick.size());
                           for (auto v : pick) e.push_back(static_cast<int>(v));
                           edges.push_back(std::move(e));
                         }
                       });
  return Hypergraph(n, r, std::move(edges));
}

namespace {

enum class TrialResult : std::uint8_t { success, failure, timeout };

// Runs trials x grid tasks over a small pool; each task writes its own slot,
// so the result is independent of scheduling.
std::vector<ScanPoint> run_grid(const PowerCycleParams& params, const std::vector<double>& ps,
                                const std::vector<double>& cs, long trials, std::uint64_t seed,
                                double timeout_seconds, int workers) {
  const std::size_t points = ps.size();
  std::vector<TrialResult> results(points * static_cast<std::size_t>(trials));
  std::atomic<std::size_t> next{0};
  const std::size_t tasks = results.size();

  auto worker = [&] {
    while (true) {
      std::size_t task = next.fetch_add(1);
      if (task >= tasks) return;
      std::size_t gi = task / static_cast<std::size_t>(trials);
      std::uint64_t trial = task % static_cast<std::size_t>(trials);
      Hypergraph h = sample_random_hypergraph(params.n, params.r, ps[gi], seed, trial);
      SearchBudget budget;
      budget.time_limit_seconds = timeout_seconds;
      SearchOutcome outcome = contains_power_cycle(h, params.k, budget);
      TrialResult res = outcome.status == SearchStatus::found     ? TrialResult::success
                        : outcome.status == SearchStatus::timeout ? TrialResult::timeout
                                                                  : TrialResult::failure;
      results[task] = res;
    }
  };

  int pool_size = std::max(1, workers);
  if (pool_size == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(pool_size));
    for (int i = 0; i < pool_size; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<ScanPoint> out(points);
  for (std::size_t gi = 0; gi < points; ++gi) {
    ScanPoint& pt = out[gi];
    pt.c = cs.empty() ? 0.0 : cs[gi];
    pt.p = ps[gi];
    pt.trials = trials;
    for (long t = 0; t < trials; ++t) {
      switch (results[gi * static_cast<std::size_t>(trials) + static_cast<std::size_t>(t)]) {
        case TrialResult::success: ++pt.successes; break;
        case TrialResult::timeout: ++pt.timeouts; break;
        case TrialResult::failure: break;
      }
    }
    pt.p_hat = static_cast<double>(pt.successes) / static_cast<double>(trials);
    pt.p_hat_optimistic =
        static_cast<double>(pt.successes + pt.timeouts) / static_cast<double>(trials);
    pt.std_err = std::sqrt(pt.p_hat * (1.0 - pt.p_hat) / static_cast<double>(trials));
  }
  return out;
}

}  // namespace

std::vector<ScanPoint> run_scan(const ScanConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("scan: trials must be >= 1");
  if (config.c_grid.empty()) throw std::invalid_argument("scan: empty C grid");
  for (std::size_t i = 0; i < config.c_grid.size(); ++i) {
    if (config.c_grid[i] <= 0) throw std::invalid_argument("scan: C values must be positive");
    if (i > 0 && config.c_grid[i] <= config.c_grid[i - 1])
      throw std::invalid_argument("scan: C grid must be strictly increasing");
  }
  const double binom = static_cast<double>(
      binom_u64(config.params.k + config.params.r - 2, config.params.r - 1));
  const double scale = std::pow(static_cast<double>(config.params.n), -1.0 / binom);
  std::vector<double> ps;
  std::vector<bool> clamped;
  ps.reserve(config.c_grid.size());
  for (double c : config.c_grid) {
    double p = c * scale;
    clamped.push_back(p > 1.0);
    ps.push_back(std::min(1.0, p));
  }
  auto points = run_grid(config.params, ps, config.c_grid, config.trials, config.seed,
                         config.timeout_seconds, config.workers);
  for (std::size_t i = 0; i < points.size(); ++i) points[i].p_clamped = clamped[i];
  return points;
}

ScanPoint estimate_containment(const PowerCycleParams& params, double p, long trials,
                               std::uint64_t seed, double timeout_seconds, int workers) {
  if (trials < 1) throw std::invalid_argument("estimate: trials must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("estimate: p must lie in [0,1]");
  auto points = run_grid(params, {p}, {}, trials, seed, timeout_seconds, workers);
  return points.front();
}

void write_scan_csv(std::ostream& out, const ScanConfig& config,
                    const std::vector<ScanPoint>& points) {
  out << "n,r,k,C,p,trials,successes,timeouts,p_hat,stderr,seed\n";
  char buf[160];
  for (const auto& pt : points) {
    std::snprintf(buf, sizeof buf, "%d,%d,%d,%.10g,%.10g,%ld,%ld,%ld,%.10g,%.10g,%llu\n",
                  config.params.n, config.params.r, config.params.k, pt.c, pt.p, pt.trials,
                  pt.successes, pt.timeouts, pt.p_hat, pt.std_err,
                  static_cast<unsigned long long>(config.seed));
    out << buf;
  }
}

std::vector<double> parse_c_grid(const std::string& spec) {
  std::istringstream in(spec);
  double lo, hi, step;
  char c1, c2;
  if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof())
    throw std::invalid_argument("C grid must be LO:HI:STEP, got \"" + spec + "\"");
  if (step <= 0) throw std::invalid_argument("C grid step must be positive");
  if (hi < lo) throw std::invalid_argument("C grid needs HI >= LO");
  std::vector<double> grid;
  for (double c = lo; c <= hi + step * 1e-9; c += step) grid.push_back(c);
  return grid;
}

}  // namespace hampow
