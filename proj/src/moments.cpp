#include "hampow/moments.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "hampow/bounds.hpp"

namespace hampow {

namespace {

void require_probability(const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0,1]");
}

CyclicPermutation pseudorandom_ordering(const PowerCycleParams& params) {
  // deterministic Fisher-Yates keyed by the parameters
  std::vector<int> order(static_cast<std::size_t>(params.n));
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t seed = mix64((static_cast<std::uint64_t>(params.n) << 40) ^
                             (static_cast<std::uint64_t>(params.r) << 20) ^
                             static_cast<std::uint64_t>(params.k));
  for (std::size_t i = order.size() - 1; i > 0; --i) {
    seed = mix64(seed);
    std::swap(order[i], order[seed % (i + 1)]);
  }
  return CyclicPermutation::canonical_from(std::move(order));
}

}  // namespace

Rational expected_count(const PowerCycleParams& params, const Rational& p) {
  require_probability(p);
  Rational count(factorial_integer(params.n - 1) / 2);
  return count * rational_pow(p, static_cast<unsigned long>(params.edge_count()));
}

MomentReport second_moment_from_histogram(const PowerCycleParams& params, const Rational& p,
                                          const OverlapHistogram& hist) {
  require_probability(p);
  const long m = params.edge_count();
  const Integer qn_count = factorial_integer(params.n - 1) / 2;
  if (hist.total() != qn_count)
    throw std::logic_error("second moment: histogram mass is not (n-1)!/2");
  const Rational qn(qn_count);

  MomentReport report{params, p, 0, 0, std::nullopt, std::nullopt};
  report.ex = qn * rational_pow(p, static_cast<unsigned long>(m));

  Rational inner = 0;  // sum_b N(b) p^(2m-b), defined for p = 0 as well
  for (const auto& [b, count] : hist.by_b)
    inner += Rational(count) * rational_pow(p, static_cast<unsigned long>(2 * m - b));
  report.ex2 = qn * inner;

  if (report.ex > 0) report.ratio = report.ex2 / (report.ex * report.ex);
  if (p > 0) {
    Rational inv = Rational(1) / p;
    Rational sum = 0;
    for (const auto& [b, count] : hist.by_b)
      if (b >= 1) sum += Rational(count) * rational_pow(inv, static_cast<unsigned long>(b));
    report.overlap_sum = sum / qn;
  }
  return report;
}

MomentReport second_moment_exact(const PowerCycleParams& params, const Rational& p,
                                 const QnSweepOptions& opts, bool recheck_sigma_independence) {
  OverlapHistogram hist = overlap_histogram(CyclicPermutation::identity(params.n), params, opts);
  if (recheck_sigma_independence) {
    OverlapHistogram other = overlap_histogram(pseudorandom_ordering(params), params, opts);
    if (other.by_b != hist.by_b || other.by_bs != hist.by_bs)
      throw std::logic_error("overlap histogram depends on the ordering; enumeration bug");
  }
  return second_moment_from_histogram(params, p, hist);
}

ContainmentTable build_containment_table(const PowerCycleParams& params, long guard_max_rsets,
                                         int workers) {
  Integer total = binom_integer(params.n, params.r);
  if (total > guard_max_rsets)
    throw GuardError("exact containment: binom(n,r) = " + total.get_str() +
                     " exceeds the guard of " + std::to_string(guard_max_rsets) +
                     " (2^binom subsets must be enumerable)");
  const long nsets = static_cast<long>(total.get_ui());
  if (nsets >= 63) throw GuardError("exact containment: subset space too large for 64-bit masks");

  // rank each r-set by lexicographic position
  std::vector<Edge> rsets;
  for_each_combination(static_cast<std::size_t>(params.n), static_cast<std::size_t>(params.r),
                       [&](const std::vector<std::size_t>& pick) {
                         Edge e;
                         for (auto i : pick) e.push_back(static_cast<int>(i));
                         rsets.push_back(std::move(e));
                       });
  const Hypergraph complete(params.n, params.r, rsets);

  std::vector<std::uint64_t> cycle_masks;
  QnEnumerator qn(params.n);
  while (auto tau = qn.next()) {
    Hypergraph h = build_power_cycle(*tau, params);
    std::uint64_t mask = 0;
    for (const auto& e : h.edges()) {
      std::size_t rank = complete.edge_index(e);
      mask |= std::uint64_t{1} << rank;
    }
    cycle_masks.push_back(mask);
  }
  std::sort(cycle_masks.begin(), cycle_masks.end());
  cycle_masks.erase(std::unique(cycle_masks.begin(), cycle_masks.end()), cycle_masks.end());

  ContainmentTable table{params, nsets, std::vector<Integer>(static_cast<std::size_t>(nsets) + 1, 0),
                         static_cast<long>(cycle_masks.size())};
  const std::uint64_t end = std::uint64_t{1} << nsets;
  const int chunks = std::max(1, workers);
  std::vector<std::vector<long>> partial(
      static_cast<std::size_t>(chunks), std::vector<long>(static_cast<std::size_t>(nsets) + 1, 0));
  auto sweep = [&](int c) {
    std::uint64_t lo = end / static_cast<std::uint64_t>(chunks) * static_cast<std::uint64_t>(c);
    std::uint64_t hi = c + 1 == chunks
                           ? end
                           : end / static_cast<std::uint64_t>(chunks) *
                                 static_cast<std::uint64_t>(c + 1);
    auto& counts = partial[static_cast<std::size_t>(c)];
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      for (std::uint64_t cyc : cycle_masks) {
        if ((mask & cyc) == cyc) {
          ++counts[static_cast<std::size_t>(std::popcount(mask))];
          break;
        }
      }
    }
  };
  if (chunks == 1) {
    sweep(0);
  } else {
    std::vector<std::thread> pool;
    for (int c = 0; c < chunks; ++c) pool.emplace_back(sweep, c);
    for (auto& t : pool) t.join();
  }
  for (const auto& counts : partial)
    for (std::size_t t = 0; t < counts.size(); ++t) table.contains_by_popcount[t] += counts[t];
  return table;
}

Rational containment_probability(const ContainmentTable& table, const Rational& p) {
  require_probability(p);
  const unsigned long n = static_cast<unsigned long>(table.total_rsets);
  Rational q = Rational(1) - p;
  Rational prob = 0;
  for (unsigned long t = 0; t <= n; ++t) {
    const Integer& count = table.contains_by_popcount[t];
    if (count == 0) continue;
    prob += Rational(count) * rational_pow(p, t) * rational_pow(q, n - t);
  }
  return prob;
}

ExactProbabilityReport exact_containment_probability(const ContainmentTable& table,
                                                     const Rational& p,
                                                     const QnSweepOptions& opts) {
  MomentReport moments = second_moment_exact(table.params, p, opts, false);
  Rational pz = moments.ex2 > 0 ? pz_lower_bound(moments.ex, moments.ex2) : Rational(0);
  return ExactProbabilityReport{table.params, p, containment_probability(table, p), pz};
}

ExactProbabilityReport exact_containment_probability(const PowerCycleParams& params,
                                                     const Rational& p, long guard_max_rsets,
                                                     const QnSweepOptions& opts) {
  ContainmentTable table = build_containment_table(params, guard_max_rsets, opts.workers);
  return exact_containment_probability(table, p, opts);
}

}  // namespace hampow
