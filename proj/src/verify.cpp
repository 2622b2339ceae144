#include "hampow/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hampow/bounds.hpp"
#include "hampow/enumeration.hpp"
#include "hampow/moments.hpp"
#include "hampow/random_lab.hpp"
#include "hampow/search.hpp"

namespace hampow {

namespace {

struct Recorder {
  VerifyReport& report;

  void check(bool ok, const std::string& invariant, const std::string& instance,
             const std::string& expected, const std::string& actual) {
    ++report.checks_run;
    if (!ok) report.failures.push_back({invariant, instance, expected, actual});
  }

  void check_eq_int(const Integer& actual, const Integer& expected, const std::string& invariant,
                    const std::string& instance) {
    check(actual == expected, invariant, instance, expected.get_str(), actual.get_str());
  }
};

std::string rk_instance(int n, int r, int k) {
  std::ostringstream os;
  os << "(n,r,k)=(" << n << "," << r << "," << k << ")";
  return os.str();
}

// exact count (integer) dominated by a log-domain bound, with a hair of
// slack for the float log of the count
bool dominated(const Integer& count, const LogValue& bound) {
  if (count == 0) return true;
  return ln_of_integer(count) <= bound.ln() + 1e-9;
}

void run_facts(Recorder& rec, const VerifyOptions& opts) {
  for (int r = 2; r <= 4; ++r) {
    for (int k = 1; k <= 3; ++k) {
      const int n = 2 * (k + r - 1) + 2;
      PowerCycleParams params(n, r, k);
      const auto sigma = CyclicPermutation::identity(n);
      Hypergraph h = build_power_cycle(sigma, params);
      rec.check_eq_int(Integer(static_cast<long>(h.edge_count())), Integer(params.edge_count()),
                       "edge count m = binom(k+r-2,r-1) n", rk_instance(n, r, k));

      bool degrees_uniform = true;
      long degree_sum = 0;
      for (int v = 0; v < n; ++v) {
        long d = h.degree_of_set(std::vector<int>{v});
        degree_sum += d;
        if (d != params.max_degree()) degrees_uniform = false;
      }
      rec.check(degrees_uniform, "vertex degrees all equal r binom(k+r-2,r-1)",
                rk_instance(n, r, k), std::to_string(params.max_degree()), "nonuniform");
      rec.check(degree_sum == static_cast<long>(h.edge_count()) * r,
                "degree sum equals r |E|", rk_instance(n, r, k),
                std::to_string(static_cast<long>(h.edge_count()) * r), std::to_string(degree_sum));
      rec.check(h.max_degree(1) == params.max_degree(), "max 1-degree matches closed form",
                rk_instance(n, r, k), std::to_string(params.max_degree()),
                std::to_string(h.max_degree(1)));

      long prev = h.max_degree(1);
      bool monotone = true;
      for (int d = 2; d <= r; ++d) {
        long cur = h.max_degree(d);
        if (cur > prev) monotone = false;
        prev = cur;
      }
      rec.check(monotone, "max d-degree nonincreasing in d", rk_instance(n, r, k), "monotone",
                "violated");

      // every window spans a complete r-graph
      const int w = params.window_size();
      bool windows_complete = true;
      for (int start = 0; start < n && windows_complete; ++start) {
        std::vector<int> window(static_cast<std::size_t>(w));
        for (int j = 0; j < w; ++j)
          window[static_cast<std::size_t>(j)] = sigma.at((start + j) % n);
        for_each_combination(static_cast<std::size_t>(w), static_cast<std::size_t>(r),
                             [&](const std::vector<std::size_t>& pick) {
                               Edge e;
                               for (auto i : pick) e.push_back(window[i]);
                               std::sort(e.begin(), e.end());
                               if (!h.has_edge(e)) windows_complete = false;
                             });
      }
      rec.check(windows_complete, "every (k+r-1)-window induces a complete r-graph",
                rk_instance(n, r, k), "complete", "missing edge");

      rec.check(components(h).size() == 1, "power cycle is connected", rk_instance(n, r, k), "1",
                std::to_string(components(h).size()));

      // rotation/reflection invariance via canonicalization
      std::vector<int> rotated;
      for (int i = 0; i < n; ++i) rotated.push_back((i + 3) % n);
      std::vector<int> reflected(rotated.rbegin(), rotated.rend());
      Hypergraph h_rot = build_power_cycle(CyclicPermutation::canonical_from(rotated), params);
      Hypergraph h_ref = build_power_cycle(CyclicPermutation::canonical_from(reflected), params);
      rec.check(h_rot == h && h_ref == h, "cycle invariant under rotation and reflection",
                rk_instance(n, r, k), "equal", "different");

      // path edge counts and the path-in-cycle embedding
      for (int v_p = k + r - 1; v_p <= k + r + 2; ++v_p) {
        Hypergraph path = build_power_path(v_p, r, k);
        rec.check_eq_int(Integer(static_cast<long>(path.edge_count())),
                         Integer(power_path_edge_count(v_p, r, k)),
                         "path edge count matches closed form",
                         "(v_p,r,k)=(" + std::to_string(v_p) + "," + std::to_string(r) + "," +
                             std::to_string(k) + ")");
        int n_embed = v_p + k + r - 1;
        if (n_embed < 2 * (k + r - 1)) n_embed = 2 * (k + r - 1);
        Hypergraph cycle =
            build_power_cycle(CyclicPermutation::identity(n_embed), PowerCycleParams(n_embed, r, k));
        bool contained = true;
        for (const auto& e : path.edges())
          if (!cycle.has_edge(e)) contained = false;
        rec.check(contained, "power path embeds into the power cycle", rk_instance(n_embed, r, k),
                  "subset", "extra edge");
      }
    }
  }

  for (int n = 3; n <= opts.qn_max; ++n) {
    QnEnumerator qn(n);
    Integer seen = 0;
    while (qn.next()) ++seen;
    rec.check_eq_int(seen, QnEnumerator::count(n), "|Q_n| = (n-1)!/2", "n=" + std::to_string(n));
  }

  EstimateReport est = verify_standard_estimates(opts.estimates_n_max);
  rec.check(est.violations.empty(), "factorial and falling-factorial estimates",
            "n_max=" + std::to_string(opts.estimates_n_max), "0 violations",
            std::to_string(est.violations.size()) + " violations");
}

void run_bounds(Recorder& rec, const VerifyOptions& opts) {
  (void)opts;
  // vertex-support lower bound, exhaustively
  for (auto [n, r, k, b_max] : std::vector<std::array<int, 4>>{{8, 3, 1, 4}, {9, 3, 2, 3}}) {
    PowerCycleParams params(n, r, k);
    auto profiles = subgraph_profiles(params, b_max);
    bool all_ok = true;
    for (const auto& prof : profiles) {
      Rational lower = min_support_size(prof.b, prof.s, r, k);
      if (Rational(prof.v_min) < lower) all_ok = false;
    }
    rec.check(all_ok, "support size >= b/binom + (r-1)s for every subgraph",
              rk_instance(n, r, k) + " b<=" + std::to_string(b_max), "dominated", "violated");
  }

  // connected-count and subgraph-count bounds against exact enumeration
  for (auto [n, r, k] : std::vector<std::array<int, 3>>{{7, 3, 1}, {8, 3, 1}}) {
    PowerCycleParams params(n, r, k);
    Hypergraph h = build_power_cycle(CyclicPermutation::identity(n), params);
    for (long b = 1; b <= 3; ++b) {
      for (int v = 0; v < n; ++v) {
        Integer exact = connected_subgraphs_from(h, v, b);
        rec.check(dominated(exact, connected_count_bound(b, r, k)),
                  "connected subgraph count dominated by (e r^2 binom)^b",
                  rk_instance(n, r, k) + " v=" + std::to_string(v) + " b=" + std::to_string(b),
                  "dominated", exact.get_str());
      }
    }
    auto profiles = subgraph_profiles(params, 3);
    for (const auto& prof : profiles) {
      rec.check(dominated(prof.count, subgraph_count_bound(n, prof.b, prof.s, r, k)),
                "(b,s) subgraph count dominated",
                rk_instance(n, r, k) + " b=" + std::to_string(prof.b) +
                    " s=" + std::to_string(prof.s),
                "dominated", prof.count.get_str());
    }
    // extension counts for every subset with at most 3 edges
    const long m = static_cast<long>(h.edge_count());
    for (long b = 1; b <= 3; ++b) {
      for_each_combination(static_cast<std::size_t>(m), static_cast<std::size_t>(b),
                           [&](const std::vector<std::size_t>& pick) {
                             EdgeSubset p(h, pick);
                             Integer exact = count_extensions(p, params);
                             LogValue bound =
                                 extension_count_bound(n, p.support_size(), p.component_count(), r, k);
                             rec.check(dominated(exact, bound),
                                       "extension count dominated by insertion bound",
                                       rk_instance(n, r, k) + " b=" + std::to_string(b),
                                       "dominated", exact.get_str());
                           });
    }
  }

  // the tree-count argument behind the connected bound, on small graphs
  {
    Hypergraph path(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    Hypergraph cycle(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    Hypergraph star(5, 2, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    for (const auto* g : {&path, &cycle, &star}) {
      long delta = g->max_degree(1);
      for (long b = 1; b <= 3; ++b) {
        for (int v = 0; v < g->vertex_count(); ++v) {
          Integer exact = connected_subgraphs_from(*g, v, b);
          LogValue bound = LogValue::from_value(std::exp(1.0) * static_cast<double>(delta)).pow(
              static_cast<double>(b));
          rec.check(dominated(exact, bound), "graph connected-subgraph count <= (e Delta)^b",
                    "graph with max degree " + std::to_string(delta) + " v=" + std::to_string(v) +
                        " b=" + std::to_string(b),
                    "dominated", exact.get_str());
        }
      }
    }
  }

  // closed-form monotonicity
  {
    bool l1_monotone = true;
    for (long b = 1; b < 8; ++b)
      if (!(connected_count_bound(b, 3, 1) < connected_count_bound(b + 1, 3, 1))) l1_monotone = false;
    rec.check(l1_monotone, "connected-count bound increasing in b", "(r,k)=(3,1)", "monotone",
              "violated");
    bool p1_monotone = true;
    for (long b = 2; b < 8; ++b)
      if (!(subgraph_count_bound(10, b, 2, 3, 1) < subgraph_count_bound(10, b + 1, 2, 3, 1))) p1_monotone = false;
    rec.check(p1_monotone, "(b,s) bound increasing in b at fixed s", "(n,s,r,k)=(10,2,3,1)",
              "monotone", "violated");
    bool p2_monotone = true;
    for (int n = 8; n < 16; ++n)
      if (!(extension_count_bound(n, 5, 1, 3, 1) < extension_count_bound(n + 1, 5, 1, 3, 1))) p2_monotone = false;
    rec.check(p2_monotone, "extension bound increasing in n", "(v_p,s,r,k)=(5,1,3,1)", "monotone",
              "violated");
  }

  // base ratio and monotonicity of the geometric majorant
  {
    double c_threshold = threshold_constant_C(3, 1).to_double();
    auto at_threshold = overlap_sum_majorant(8, 3, 1, c_threshold);
    rec.check(at_threshold.domination_holds && std::abs(at_threshold.rho - 1.0) < 1e-9,
              "majorant base ratio is 1 at the threshold constant", "(n,r,k)=(8,3,1)", "rho=1",
              std::to_string(at_threshold.rho));
    auto at_10x = overlap_sum_majorant(8, 3, 1, 10.0 * c_threshold);
    rec.check(at_10x.value < at_threshold.value, "majorant decreasing in the constant",
              "(n,r,k)=(8,3,1)", "decreasing", "not decreasing");
  }
}

void run_moments(Recorder& rec, const VerifyOptions& opts) {
  for (int n : {7, 8}) {
    PowerCycleParams params(n, 3, 1);
    QnSweepOptions sweep;
    sweep.workers = opts.workers;
    OverlapHistogram hist = overlap_histogram(CyclicPermutation::identity(n), params, sweep);
    rec.check_eq_int(hist.total(), QnEnumerator::count(n), "histogram mass is (n-1)!/2",
                     rk_instance(n, 3, 1));
    bool consistent = true;
    for (const auto& [b, count] : hist.by_b) {
      if (b == 0) continue;
      Integer sum = 0;
      for (const auto& [key, c] : hist.by_bs)
        if (key.first == b) sum += c;
      if (sum != count) consistent = false;
    }
    rec.check(consistent, "sum over s of N(b,s) equals N(b)", rk_instance(n, 3, 1), "equal",
              "inconsistent");
    rec.check(hist.count_b(hist.m) >= 1, "the cycle overlaps itself fully", rk_instance(n, 3, 1),
              ">=1", hist.count_b(hist.m).get_str());

    // ordering independence, one seeded non-identity ordering
    std::vector<int> shuffled(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) shuffled[static_cast<std::size_t>(i)] = i;
    std::uint64_t s = opts.seed;
    for (std::size_t i = shuffled.size() - 1; i > 0; --i) {
      s = mix64(s);
      std::swap(shuffled[i], shuffled[s % (i + 1)]);
    }
    OverlapHistogram other =
        overlap_histogram(CyclicPermutation::canonical_from(shuffled), params, sweep);
    rec.check(other.by_b == hist.by_b && other.by_bs == hist.by_bs,
              "overlap histogram independent of the ordering", rk_instance(n, 3, 1), "equal",
              "different");

    // second-moment identity: assemble E[X^2] from each sigma's histogram
    if (n == 7) {
      for (const Rational& p : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
        MomentReport report = second_moment_from_histogram(params, p, hist);
        Rational direct = 0;
        QnEnumerator qn(n);
        while (auto sigma = qn.next()) {
          OverlapHistogram hs = overlap_histogram(*sigma, params, sweep);
          for (const auto& [b, count] : hs.by_b)
            direct +=
                Rational(count) * rational_pow(p, static_cast<unsigned long>(2 * hist.m - b));
        }
        rec.check(report.ex2 == direct, "second moment equals the pairwise double sum",
                  rk_instance(n, 3, 1) + " p=" + rational_to_string(p),
                  rational_to_string(direct), rational_to_string(report.ex2));
        rec.check(report.ratio && *report.ratio >= 1, "E[X^2] >= E[X]^2",
                  rk_instance(n, 3, 1) + " p=" + rational_to_string(p), ">=1",
                  report.ratio ? rational_to_string(*report.ratio) : "absent");
        rec.check(report.ex2 >= report.ex, "E[X^2] >= E[X] for integer X",
                  rk_instance(n, 3, 1) + " p=" + rational_to_string(p), ">=", "violated");
      }
      MomentReport at_one = second_moment_from_histogram(params, Rational(1), hist);
      rec.check(at_one.ratio && *at_one.ratio == 1, "deterministic X has ratio exactly 1",
                rk_instance(n, 3, 1) + " p=1", "1",
                at_one.ratio ? rational_to_string(*at_one.ratio) : "absent");
      rec.check(at_one.overlap_sum && *at_one.overlap_sum <= 1,
                "overlap sum at p=1 is at most 1", rk_instance(n, 3, 1), "<=1",
                at_one.overlap_sum ? rational_to_string(*at_one.overlap_sum) : "absent");
      rec.check(expected_count(params, Rational(1)) == Rational(QnEnumerator::count(n)),
                "expected count at p=1 is |Q_n|", rk_instance(n, 3, 1),
                QnEnumerator::count(n).get_str(),
                rational_to_string(expected_count(params, Rational(1))));
      rec.check(expected_count(params, Rational(0)) == 0, "expected count at p=0 is 0",
                rk_instance(n, 3, 1), "0", "nonzero");
    }
  }

  // exact containment on the one micro instance where 2^binom(n,r) is small
  {
    PowerCycleParams params(6, 3, 1);
    ContainmentTable table = build_containment_table(params);
    Rational prev(-1);
    bool pz_ok = true, monotone = true;
    for (int tenth = 1; tenth <= 9; ++tenth) {
      Rational p(tenth, 10);
      p.canonicalize();
      auto report = exact_containment_probability(table, p);
      if (report.pz_bound > report.prob_contains) pz_ok = false;
      if (report.prob_contains < prev) monotone = false;
      prev = report.prob_contains;
    }
    rec.check(pz_ok, "second-moment lower bound below the exact probability", "(6,3,1) p=k/10",
              "dominated", "violated");
    rec.check(monotone, "containment probability nondecreasing in p", "(6,3,1) p=k/10",
              "monotone", "violated");
    rec.check(containment_probability(table, Rational(0)) == 0, "containment at p=0", "(6,3,1)",
              "0", "nonzero");
    rec.check(containment_probability(table, Rational(1)) == 1, "containment at p=1", "(6,3,1)",
              "1", "not 1");
  }
}

void run_search(Recorder& rec, const VerifyOptions& opts) {
  SearchBudget budget;
  budget.time_limit_seconds = opts.search_timeout_seconds;

  struct Batch {
    int n, r, k;
    long instances;
    double p_lo, p_hi;
  };
  for (const Batch& batch : {Batch{10, 3, 1, opts.search_instances_tight, 0.15, 0.85},
                             Batch{9, 3, 2, opts.search_instances_square, 0.55, 0.95}}) {
    long disagreements = 0, timeouts = 0, unsound = 0;
    std::vector<Hypergraph> found_instances;
    for (long t = 0; t < batch.instances; ++t) {
      double frac = batch.instances > 1
                        ? static_cast<double>(t) / static_cast<double>(batch.instances - 1)
                        : 0.0;
      double p = batch.p_lo + (batch.p_hi - batch.p_lo) * frac;
      Hypergraph h = sample_random_hypergraph(
          batch.n, batch.r, p, opts.seed ^ static_cast<std::uint64_t>(batch.n * 1000 + batch.k),
          static_cast<std::uint64_t>(t));
      SearchOutcome fast = contains_power_cycle(h, batch.k, budget);
      SearchOutcome oracle = brute_force_contains(h, batch.k);
      if (fast.status == SearchStatus::timeout) ++timeouts;
      if (fast.status != oracle.status) ++disagreements;
      for (const SearchOutcome* out : {&fast, &oracle}) {
        if (out->status != SearchStatus::found) continue;
        Hypergraph witness_cycle =
            build_power_cycle(*out->witness, PowerCycleParams(batch.n, batch.r, batch.k));
        for (const auto& e : witness_cycle.edges())
          if (!h.has_edge(e)) ++unsound;
      }
      if (fast.status == SearchStatus::found && found_instances.size() < 5)
        found_instances.push_back(h);
    }
    std::string instance = rk_instance(batch.n, batch.r, batch.k) + " over " +
                           std::to_string(batch.instances) + " seeded instances";
    rec.check(disagreements == 0, "backtracking agrees with the exhaustive oracle", instance, "0",
              std::to_string(disagreements));
    rec.check(timeouts == 0, "no timeouts at the default budget", instance, "0",
              std::to_string(timeouts));
    rec.check(unsound == 0, "every witness verifies edgewise", instance, "0",
              std::to_string(unsound));

    // monotonicity under extra edges
    long monotone_violations = 0;
    for (const Hypergraph& h : found_instances) {
      std::vector<Edge> extended = h.edges();
      std::uint64_t s = opts.seed;
      for (int extra = 0; extra < 5; ++extra) {
        Edge e;
        while (true) {
          e.clear();
          std::vector<bool> in(static_cast<std::size_t>(batch.n), false);
          while (static_cast<int>(e.size()) < batch.r) {
            s = mix64(s);
            int v = static_cast<int>(s % static_cast<std::uint64_t>(batch.n));
            if (!in[static_cast<std::size_t>(v)]) {
              in[static_cast<std::size_t>(v)] = true;
              e.push_back(v);
            }
          }
          std::sort(e.begin(), e.end());
          if (!h.has_edge(e)) break;
        }
        extended.push_back(e);
      }
      Hypergraph bigger(batch.n, batch.r, extended);
      if (contains_power_cycle(bigger, batch.k, budget).status != SearchStatus::found)
        ++monotone_violations;
    }
    rec.check(monotone_violations == 0, "supersets of a found instance stay found", instance, "0",
              std::to_string(monotone_violations));
  }

  // planted cycles and degenerate inputs
  for (auto [n, r, k] : std::vector<std::array<int, 3>>{{8, 3, 1}, {9, 3, 2}, {8, 2, 2}, {10, 4, 1}}) {
    PowerCycleParams params(n, r, k);
    Hypergraph planted = build_power_cycle(CyclicPermutation::identity(n), params);
    SearchOutcome out = contains_power_cycle(planted, k, budget);
    bool sound = out.status == SearchStatus::found;
    if (sound) {
      Hypergraph regenerated = build_power_cycle(*out.witness, params);
      for (const auto& e : regenerated.edges())
        if (!planted.has_edge(e)) sound = false;
    }
    rec.check(sound, "planted cycle is found and verifies", rk_instance(n, r, k), "found",
              to_string(out.status));

    Hypergraph empty(n, r, {});
    rec.check(contains_power_cycle(empty, k, budget).status == SearchStatus::not_found,
              "empty hypergraph has no spanning cycle", rk_instance(n, r, k), "not_found",
              "other");

    // drop one edge: below the required edge count, the fast path refuses
    std::vector<Edge> fewer(planted.edges().begin(), planted.edges().end() - 1);
    Hypergraph below(n, r, fewer);
    SearchOutcome below_out = contains_power_cycle(below, k, budget);
    rec.check(below_out.status == SearchStatus::not_found && below_out.nodes_expanded == 0,
              "edge-count fast path rejects without search", rk_instance(n, r, k),
              "not_found/0 nodes",
              std::string(to_string(below_out.status)) + "/" +
                  std::to_string(below_out.nodes_expanded));
  }

  // complete r-graph at the minimum size always contains the cycle
  for (auto [r, k] : std::vector<std::array<int, 2>>{{3, 1}, {3, 2}, {2, 3}}) {
    int n = 2 * (k + r - 1);
    std::vector<Edge> all;
    for_each_combination(static_cast<std::size_t>(n), static_cast<std::size_t>(r),
                         [&](const std::vector<std::size_t>& pick) {
                           Edge e;
                           for (auto v : pick) e.push_back(static_cast<int>(v));
                           all.push_back(std::move(e));
                         });
    Hypergraph complete(n, r, all);
    rec.check(brute_force_contains(complete, k).status == SearchStatus::found,
              "complete r-graph contains the cycle", rk_instance(n, r, k), "found", "not_found");
  }
}

}  // namespace

VerifyReport run_verify(const std::string& suite, const VerifyOptions& opts) {
  VerifyReport report;
  report.suite = suite;
  Recorder rec{report};
  bool all = suite == "all";
  bool known = all;
  if (suite == "facts" || all) {
    run_facts(rec, opts);
    known = true;
  }
  if (suite == "bounds" || all) {
    run_bounds(rec, opts);
    known = true;
  }
  if (suite == "moments" || all) {
    run_moments(rec, opts);
    known = true;
  }
  if (suite == "search" || all) {
    run_search(rec, opts);
    known = true;
  }
  if (!known)
    throw std::invalid_argument("unknown verify suite \"" + suite +
                                "\"; expected facts, bounds, moments, search, or all");
  return report;
}

}  // namespace hampow
