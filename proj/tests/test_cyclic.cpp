#include <doctest.h>

#include <set>

#include "hampow/cyclic.hpp"
#include "hampow/enumeration.hpp"

using namespace hampow;

TEST_CASE("Q_n enumeration counts (n-1)!/2") {
  const long expected[] = {0, 0, 0, 1, 3, 12, 60, 360, 2520, 20160};
  for (int n = 3; n <= 9; ++n) {
    QnEnumerator qn(n);
    long seen = 0;
    std::set<std::vector<int>> distinct;
    while (auto sigma = qn.next()) {
      ++seen;
      CHECK(sigma->at(0) == 0);
      CHECK(sigma->at(1) < sigma->at(n - 1));
      distinct.insert(sigma->order());
    }
    CHECK(seen == expected[n]);
    CHECK(static_cast<long>(distinct.size()) == seen);
    CHECK(QnEnumerator::count(n) == Integer(expected[n]));
  }
  CHECK_THROWS_AS(QnEnumerator(2), std::invalid_argument);
  CHECK_THROWS_WITH_AS(QnEnumerator(13), doctest::Contains("(n-1)!/2"), GuardError);
}

TEST_CASE("tail unranking matches sequential enumeration") {
  const int n = 6;
  QnEnumerator qn(n);
  std::vector<std::vector<int>> sequential;
  while (auto sigma = qn.next()) sequential.push_back(sigma->order());

  std::vector<std::vector<int>> by_rank;
  for (std::uint64_t rank = 0; rank < QnEnumerator::tail_count(n); ++rank) {
    auto tail = QnEnumerator::tail_at_rank(n, rank);
    if (!QnEnumerator::tail_is_canonical(tail)) continue;
    std::vector<int> order{0};
    order.insert(order.end(), tail.begin(), tail.end());
    by_rank.push_back(order);
  }
  CHECK(by_rank == sequential);
}

TEST_CASE("canonical form fixes rotation and reflection") {
  auto a = CyclicPermutation::canonical_from({2, 3, 4, 0, 1});
  CHECK(a.order() == std::vector<int>{0, 1, 2, 3, 4});
  auto b = CyclicPermutation::canonical_from({0, 4, 3, 2, 1});  // reflection of identity
  CHECK(b.order() == std::vector<int>{0, 1, 2, 3, 4});

  CHECK_THROWS_AS(CyclicPermutation::canonical_from({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(CyclicPermutation::canonical_from({0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(CyclicPermutation::canonical_from({0, 1, 5}), std::invalid_argument);
}

TEST_CASE("power cycle structure") {
  Hypergraph square12 =
      build_power_cycle(CyclicPermutation::identity(12), PowerCycleParams(12, 3, 2));
  CHECK(square12.edge_count() == 36);

  Hypergraph tight7 = build_power_cycle(CyclicPermutation::identity(7), PowerCycleParams(7, 3, 1));
  CHECK(tight7.edge_count() == 7);
  for (int v = 0; v < 7; ++v) CHECK(tight7.degree_of_set(std::vector<int>{v}) == 3);

  Hypergraph classical =
      build_power_cycle(CyclicPermutation::identity(8), PowerCycleParams(8, 2, 1));
  CHECK(classical.edge_count() == 8);  // a graph Hamilton cycle

  CHECK_THROWS_AS(PowerCycleParams(7, 3, 2), std::invalid_argument);  // below 2(k+r-1)
  CHECK_THROWS_AS(PowerCycleParams(8, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(PowerCycleParams(8, 1, 1), std::invalid_argument);
}

TEST_CASE("edge count formula is exact from the boundary up") {
  for (int r = 2; r <= 4; ++r) {
    for (int k = 1; k <= 3; ++k) {
      for (int n = 2 * (k + r - 1); n <= 2 * (k + r - 1) + 2; ++n) {
        PowerCycleParams params(n, r, k);
        Hypergraph h = build_power_cycle(CyclicPermutation::identity(n), params);
        CHECK(static_cast<long>(h.edge_count()) == params.edge_count());
        for (int v = 0; v < n; ++v)
          CHECK(h.degree_of_set(std::vector<int>{v}) == params.max_degree());
      }
    }
  }
}

TEST_CASE("rotation and reflection give the same cycle") {
  PowerCycleParams params(9, 3, 2);
  Hypergraph base = build_power_cycle(CyclicPermutation::identity(9), params);
  std::vector<int> rotated;
  for (int i = 0; i < 9; ++i) rotated.push_back((i + 4) % 9);
  std::vector<int> reflected(rotated.rbegin(), rotated.rend());
  CHECK(build_power_cycle(CyclicPermutation::canonical_from(rotated), params) == base);
  CHECK(build_power_cycle(CyclicPermutation::canonical_from(reflected), params) == base);
}

TEST_CASE("every window spans a complete r-graph") {
  for (auto [n, r, k] : std::vector<std::array<int, 3>>{{8, 3, 1}, {9, 3, 2}, {12, 4, 2}}) {
    PowerCycleParams params(n, r, k);
    auto sigma = CyclicPermutation::identity(n);
    Hypergraph h = build_power_cycle(sigma, params);
    const int w = params.window_size();
    for (int start = 0; start < n; ++start) {
      std::vector<int> window(static_cast<std::size_t>(w));
      for (int j = 0; j < w; ++j) window[static_cast<std::size_t>(j)] = sigma.at((start + j) % n);
      for_each_combination(static_cast<std::size_t>(w), static_cast<std::size_t>(r),
                           [&](const std::vector<std::size_t>& pick) {
                             Edge e;
                             for (auto i : pick) e.push_back(window[i]);
                             std::sort(e.begin(), e.end());
                             CHECK(h.has_edge(e));
                           });
    }
  }
}

TEST_CASE("power paths") {
  CHECK(build_power_path(4, 3, 2).edge_count() == 4);
  CHECK(build_power_path(5, 3, 1).edge_count() == 3);
  CHECK(build_power_path(6, 3, 2).edge_count() == 10);
  CHECK_THROWS_AS(build_power_path(3, 3, 2), std::invalid_argument);

  CHECK(power_path_edge_count(4, 3, 2) == 4);
  CHECK(power_path_edge_count(5, 3, 1) == 3);
  CHECK(power_path_edge_count(6, 3, 2) == 10);

  // the path embeds into any long enough cycle on the same initial vertices
  for (auto [v_p, r, k] : std::vector<std::array<int, 3>>{{6, 3, 2}, {7, 3, 1}, {5, 2, 2}}) {
    Hypergraph path = build_power_path(v_p, r, k);
    int n = v_p + k + r - 1;
    Hypergraph cycle = build_power_cycle(CyclicPermutation::identity(n), PowerCycleParams(n, r, k));
    for (const auto& e : path.edges()) CHECK(cycle.has_edge(e));
  }
}

TEST_CASE("closed forms") {
  CHECK(power_cycle_max_degree(3, 2) == 9);
  CHECK(power_cycle_max_degree(3, 1) == 3);
  CHECK(power_cycle_edge_count(10, 3, 1) == 10);
  CHECK(power_cycle_edge_count(12, 3, 2) == 36);
  CHECK_THROWS_AS(power_cycle_edge_count(7, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(power_cycle_max_degree(1, 1), std::invalid_argument);
}
