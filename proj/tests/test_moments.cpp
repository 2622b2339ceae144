#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "hampow/moments.hpp"

using namespace hampow;

namespace {

std::set<Edge> window_edge_set(const std::vector<int>& order, int r, int k) {
  const int n = static_cast<int>(order.size());
  const int w = k + r - 1;
  std::set<Edge> edges;
  for (int start = 0; start < n; ++start) {
    std::vector<int> window;
    for (int j = 0; j < w; ++j) window.push_back(order[static_cast<std::size_t>((start + j) % n)]);
    for_each_combination(static_cast<std::size_t>(w), static_cast<std::size_t>(r),
                         [&](const std::vector<std::size_t>& pick) {
                           Edge e;
                           for (auto i : pick) e.push_back(window[i]);
                           std::sort(e.begin(), e.end());
                           edges.insert(e);
                         });
  }
  return edges;
}

}  // namespace

TEST_CASE("expected count") {
  PowerCycleParams params(7, 3, 1);
  CHECK(expected_count(params, Rational(1)) == Rational(360));
  CHECK(expected_count(params, Rational(0)) == 0);
  CHECK(expected_count(params, Rational(1, 2)) == Rational(45, 16));
  CHECK_THROWS_AS(expected_count(params, Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(expected_count(params, Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("second moment equals the full pairwise double sum") {
  // oracle: enumerate all canonical ordering pairs and sum p^|union| directly
  PowerCycleParams params(7, 3, 1);
  std::vector<std::set<Edge>> cycles;
  {
    QnEnumerator qn(7);
    while (auto sigma = qn.next()) cycles.push_back(window_edge_set(sigma->order(), 3, 1));
  }
  REQUIRE(cycles.size() == 360);

  std::map<long, long> union_sizes;
  for (const auto& a : cycles)
    for (const auto& b : cycles) {
      std::set<Edge> u = a;
      u.insert(b.begin(), b.end());
      union_sizes[static_cast<long>(u.size())] += 1;
    }

  for (const Rational& p : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    Rational direct = 0;
    for (const auto& [size, pairs] : union_sizes)
      direct += Rational(pairs) * rational_pow(p, static_cast<unsigned long>(size));
    MomentReport report = second_moment_exact(params, p);
    CHECK(report.ex2 == direct);  // exact rational equality
  }
}

TEST_CASE("moment report identities") {
  PowerCycleParams params(7, 3, 1);

  MomentReport at_one = second_moment_exact(params, Rational(1));
  CHECK(at_one.ratio.has_value());
  CHECK(*at_one.ratio == Rational(1));  // X is deterministic at p = 1
  CHECK(at_one.overlap_sum.has_value());
  CHECK(*at_one.overlap_sum <= 1);  // sum_{b>=1} N(b) <= |Q_n|

  MomentReport at_zero = second_moment_exact(params, Rational(0));
  CHECK(at_zero.ex == 0);
  CHECK(at_zero.ex2 == 0);
  CHECK(!at_zero.ratio.has_value());
  CHECK(!at_zero.overlap_sum.has_value());

  for (const Rational& p : {Rational(1, 10), Rational(1, 2), Rational(9, 10)}) {
    MomentReport report = second_moment_exact(params, p);
    CHECK(report.ex2 >= report.ex);  // X integer-valued
    CHECK(report.ratio.has_value());
    CHECK(*report.ratio >= 1);  // Cauchy-Schwarz
    // ratio <= 1 + overlap sum, with equality iff no ordering is disjoint
    CHECK(*report.ratio <= Rational(1) + *report.overlap_sum);
  }

  // frozen at p = 1/2 (cross-checked by the double-sum oracle above)
  MomentReport half = second_moment_exact(params, Rational(1, 2));
  CHECK(half.ex == Rational(45, 16));
  CHECK(half.ex2 == Rational(69795, 2048));
  CHECK(*half.ratio == Rational(517, 120));
  CHECK(*half.overlap_sum == Rational(143, 36));
}

TEST_CASE("containment table at the micro scale") {
  PowerCycleParams params(6, 3, 1);
  ContainmentTable table = build_containment_table(params);
  CHECK(table.total_rsets == 20);
  CHECK(table.distinct_cycle_masks == 60);

  // every superset of the full edge set contains a cycle; no set below 6
  // edges can
  CHECK(table.contains_by_popcount[20] == Integer(1));
  for (int t = 0; t < 6; ++t) CHECK(table.contains_by_popcount[static_cast<std::size_t>(t)] == 0);
  CHECK(table.contains_by_popcount[6] == Integer(60));  // exactly the cycles themselves

  CHECK(containment_probability(table, Rational(0)) == 0);
  CHECK(containment_probability(table, Rational(1)) == 1);

  // frozen exact value at p = 1/2: the census divided by 2^20
  Integer favourable = 0;
  for (const auto& count : table.contains_by_popcount) favourable += count;
  CHECK(containment_probability(table, Rational(1, 2)) ==
        Rational(favourable, Integer(1) << 20));
  CHECK(containment_probability(table, Rational(1, 2)) == Rational(355297, 1048576));
}

TEST_CASE("exact probability dominates the second-moment bound") {
  PowerCycleParams params(6, 3, 1);
  ContainmentTable table = build_containment_table(params);
  Rational previous(-1);
  for (int tenth = 1; tenth <= 9; ++tenth) {
    Rational p(tenth, 10);
    p.canonicalize();
    ExactProbabilityReport report = exact_containment_probability(table, p);
    CHECK(report.pz_bound >= 0);
    CHECK(report.pz_bound <= report.prob_contains);
    CHECK(report.prob_contains <= 1);
    CHECK(report.prob_contains >= previous);  // monotone in p
    previous = report.prob_contains;

    // sandwich: one fixed cycle <= P(X>0) <= E[X]
    Rational single = rational_pow(p, 6);
    CHECK(report.prob_contains >= single);
    Rational ex = expected_count(params, p);
    if (ex <= 1) CHECK(report.prob_contains <= ex);
  }
}

TEST_CASE("containment table is identical under any worker count") {
  PowerCycleParams params(6, 3, 1);
  ContainmentTable serial = build_containment_table(params, kDefaultRsetGuard, 1);
  ContainmentTable parallel = build_containment_table(params, kDefaultRsetGuard, 3);
  CHECK(serial.contains_by_popcount == parallel.contains_by_popcount);
}

TEST_CASE("containment guards") {
  CHECK_THROWS_AS(build_containment_table(PowerCycleParams(8, 3, 1)), GuardError);  // binom(8,3)=56
  PowerCycleParams params(6, 3, 1);
  CHECK_THROWS_AS(containment_probability(build_containment_table(params), Rational(2)),
                  std::invalid_argument);
}
