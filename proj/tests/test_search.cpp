#include <doctest.h>

#include <numeric>

#include "hampow/enumeration.hpp"
#include "hampow/random_lab.hpp"
#include "hampow/search.hpp"

using namespace hampow;

namespace {

bool witness_verifies(const SearchOutcome& outcome, const Hypergraph& h, int k) {
  if (outcome.status != SearchStatus::found) return false;
  Hypergraph cycle = build_power_cycle(
      *outcome.witness, PowerCycleParams(h.vertex_count(), h.uniformity(), k));
  for (const auto& e : cycle.edges())
    if (!h.has_edge(e)) return false;
  return true;
}

}  // namespace

TEST_CASE("planted cycles are found") {
  for (auto [n, r, k] : std::vector<std::array<int, 3>>{{8, 3, 1}, {9, 3, 2}, {8, 2, 2}, {10, 4, 1}}) {
    Hypergraph planted = build_power_cycle(CyclicPermutation::identity(n), PowerCycleParams(n, r, k));
    SearchOutcome out = contains_power_cycle(planted, k);
    REQUIRE(out.status == SearchStatus::found);
    CHECK(witness_verifies(out, planted, k));
    CHECK(brute_force_contains(planted, k).status == SearchStatus::found);
  }
}

TEST_CASE("edge-count fast path") {
  PowerCycleParams params(9, 3, 1);
  Hypergraph planted = build_power_cycle(CyclicPermutation::identity(9), params);
  std::vector<Edge> missing_one(planted.edges().begin(), planted.edges().end() - 1);
  SearchOutcome out = contains_power_cycle(Hypergraph(9, 3, missing_one), 1);
  CHECK(out.status == SearchStatus::not_found);
  CHECK(out.nodes_expanded == 0);

  CHECK(contains_power_cycle(Hypergraph(9, 3, {}), 1).status == SearchStatus::not_found);
}

TEST_CASE("degree fast path agrees with exhaustive search") {
  // keep the edge count at m but starve vertex 3
  PowerCycleParams params(8, 3, 1);
  Hypergraph planted = build_power_cycle(CyclicPermutation::identity(8), params);
  std::vector<Edge> edges;
  for (const auto& e : planted.edges())
    if (std::find(e.begin(), e.end(), 3) == e.end()) edges.push_back(e);
  edges.push_back({0, 2, 4});
  edges.push_back({0, 4, 6});
  edges.push_back({1, 4, 7});
  Hypergraph starved(8, 3, edges);
  REQUIRE(static_cast<long>(starved.edge_count()) >= params.edge_count());
  SearchOutcome fast = contains_power_cycle(starved, 1);
  CHECK(fast.status == SearchStatus::not_found);
  CHECK(fast.nodes_expanded == 0);  // rejected by the degree precondition
  CHECK(brute_force_contains(starved, 1).status == SearchStatus::not_found);
}

TEST_CASE("agreement with the exhaustive oracle on seeded instances") {
  // a smaller copy of the acceptance batch
  long found = 0;
  for (long t = 0; t < 40; ++t) {
    double p = 0.15 + 0.7 * static_cast<double>(t) / 39.0;
    Hypergraph h = sample_random_hypergraph(10, 3, p, 0xfeed, static_cast<std::uint64_t>(t));
    SearchOutcome fast = contains_power_cycle(h, 1);
    SearchOutcome oracle = brute_force_contains(h, 1);
    REQUIRE(fast.status != SearchStatus::timeout);
    CHECK(fast.status == oracle.status);
    if (fast.status == SearchStatus::found) {
      ++found;
      CHECK(witness_verifies(fast, h, 1));
      CHECK(witness_verifies(oracle, h, 1));
    }
  }
  CHECK(found > 0);  // the p ramp covers both regimes
  CHECK(found < 40);
}

TEST_CASE("supersets of a found instance stay found") {
  Hypergraph h = sample_random_hypergraph(10, 3, 0.7, 0xfeed, 99);
  SearchOutcome base = contains_power_cycle(h, 1);
  REQUIRE(base.status == SearchStatus::found);
  std::vector<Edge> extended = h.edges();
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 8; ++c)
        if (!h.has_edge(Edge{a, b, c})) extended.push_back({a, b, c});
  Hypergraph bigger(10, 3, extended);
  CHECK(contains_power_cycle(bigger, 1).status == SearchStatus::found);
}

TEST_CASE("budgets") {
  // node budget trips deterministically
  Hypergraph planted =
      build_power_cycle(CyclicPermutation::identity(12), PowerCycleParams(12, 3, 1));
  SearchBudget tiny;
  tiny.node_limit = 3;
  SearchOutcome out = contains_power_cycle(planted, 1, tiny);
  CHECK(out.status == SearchStatus::timeout);

  // zero wall-clock budget times out immediately
  SearchBudget zero;
  zero.time_limit_seconds = 0.0;
  CHECK(contains_power_cycle(planted, 1, zero).status == SearchStatus::timeout);

  // and found still wins when the limit is generous
  SearchBudget roomy;
  roomy.time_limit_seconds = 30.0;
  CHECK(contains_power_cycle(planted, 1, roomy).status == SearchStatus::found);
}

TEST_CASE("parameter validation and guards") {
  Hypergraph small = build_power_cycle(CyclicPermutation::identity(7), PowerCycleParams(7, 3, 1));
  CHECK_THROWS_AS(contains_power_cycle(small, 2), std::invalid_argument);  // k=2 needs n >= 8

  Hypergraph big = build_power_cycle(CyclicPermutation::identity(11), PowerCycleParams(11, 3, 1));
  CHECK_THROWS_AS(brute_force_contains(big, 1), GuardError);
  CHECK(brute_force_contains(big, 1, 11).status == SearchStatus::found);
}

TEST_CASE("complete r-graph at the minimum order contains the cycle") {
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
    CHECK(contains_power_cycle(complete, k).status == SearchStatus::found);
    CHECK(brute_force_contains(complete, k).status == SearchStatus::found);
  }
}
