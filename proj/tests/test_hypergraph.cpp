#include <doctest.h>

#include <sstream>

#include "hampow/cyclic.hpp"
#include "hampow/hypergraph.hpp"

using namespace hampow;

TEST_CASE("construction canonicalizes and validates") {
  Hypergraph single(3, 3, {{0, 1, 2}});
  CHECK(single.edge_count() == 1);

  Hypergraph deduped(4, 3, {{0, 1, 2}, {2, 1, 0}});
  CHECK(deduped.edge_count() == 1);
  CHECK(deduped.edge(0) == Edge{0, 1, 2});

  CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(2, 3, {}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(4, 1, {}), std::invalid_argument);

  // canonical lexicographic edge order
  Hypergraph h(5, 2, {{3, 4}, {0, 2}, {0, 1}});
  CHECK(h.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {3, 4}});
}

TEST_CASE("degree of a vertex set") {
  Hypergraph complete4(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(complete4.degree_of_set(std::vector<int>{0}) == 3);
  CHECK(complete4.degree_of_set(std::vector<int>{0, 1}) == 2);
  CHECK(complete4.degree_of_set(std::vector<int>{0, 1, 2}) == 1);

  Hypergraph tight7 = build_power_cycle(CyclicPermutation::identity(7), PowerCycleParams(7, 3, 1));
  for (int v = 0; v < 7; ++v) CHECK(tight7.degree_of_set(std::vector<int>{v}) == 3);

  Hypergraph empty(5, 3, {});
  CHECK(empty.degree_of_set(std::vector<int>{2}) == 0);

  CHECK_THROWS_AS(complete4.degree_of_set(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(complete4.degree_of_set(std::vector<int>{0, 1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(complete4.degree_of_set(std::vector<int>{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(complete4.degree_of_set(std::vector<int>{7}), std::invalid_argument);
}

TEST_CASE("maximum d-degree") {
  Hypergraph square12 =
      build_power_cycle(CyclicPermutation::identity(12), PowerCycleParams(12, 3, 2));
  CHECK(square12.max_degree(1) == 9);

  Hypergraph empty(5, 3, {});
  CHECK(empty.max_degree(1) == 0);

  Hypergraph tight7 = build_power_cycle(CyclicPermutation::identity(7), PowerCycleParams(7, 3, 1));
  CHECK(tight7.max_degree(1) == 3);
  CHECK_THROWS_AS(tight7.max_degree(0), std::invalid_argument);
  CHECK_THROWS_AS(tight7.max_degree(4), std::invalid_argument);

  // nonincreasing in d
  long prev = square12.max_degree(1);
  for (int d = 2; d <= 3; ++d) {
    long cur = square12.max_degree(d);
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("degree sum identity") {
  for (auto [n, r, k] : std::vector<std::array<int, 3>>{{8, 3, 1}, {9, 3, 2}, {10, 2, 3}}) {
    Hypergraph h = build_power_cycle(CyclicPermutation::identity(n), PowerCycleParams(n, r, k));
    long sum = 0;
    for (int v = 0; v < n; ++v) sum += h.degree_of_set(std::vector<int>{v});
    CHECK(sum == r * static_cast<long>(h.edge_count()));
  }
}

TEST_CASE("components are edge-based") {
  Hypergraph two(6, 3, {{0, 1, 2}, {3, 4, 5}});
  CHECK(components(two).size() == 2);

  Hypergraph tight7 = build_power_cycle(CyclicPermutation::identity(7), PowerCycleParams(7, 3, 1));
  CHECK(components(tight7).size() == 1);

  Hypergraph empty(5, 3, {});
  CHECK(components(empty).empty());

  // pairwise-sharing edges form one component; isolated vertices ignored
  Hypergraph star(9, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
  CHECK(components(star).size() == 1);
}

TEST_CASE("edge subsets") {
  Hypergraph tight8 = build_power_cycle(CyclicPermutation::identity(8), PowerCycleParams(8, 3, 1));
  EdgeSubset empty(tight8);
  CHECK(empty.size() == 0);
  CHECK(empty.support_size() == 0);
  CHECK(empty.component_count() == 0);

  EdgeSubset pair(tight8, {0, 4});
  CHECK(pair.size() == 2);
  CHECK(pair.component_count() == (tight8.edge_mask(0).intersects(tight8.edge_mask(4)) ? 1 : 2));

  CHECK_THROWS_AS(EdgeSubset(tight8, {99}), std::invalid_argument);
}

TEST_CASE("file format round trip and diagnostics") {
  std::istringstream in("3 3\n0 1 2\n");
  Hypergraph h = Hypergraph::parse(in, "mem");
  CHECK(h.vertex_count() == 3);
  CHECK(h.uniformity() == 3);
  CHECK(h.edge_count() == 1);

  Hypergraph cycle = build_power_cycle(CyclicPermutation::identity(9), PowerCycleParams(9, 3, 2));
  std::ostringstream out;
  cycle.write(out);
  std::istringstream back(out.str());
  CHECK(Hypergraph::parse(back, "mem") == cycle);

  auto parse_err = [](const std::string& text) -> std::string {
    std::istringstream bad(text);
    try {
      Hypergraph::parse(bad, "f");
    } catch (const std::runtime_error& e) {
      return e.what();
    }
    return "";
  };
  CHECK(parse_err("4 3\n0 1\n").find("f:2") != std::string::npos);         // short edge
  CHECK(parse_err("4 3\n# c\n0 1 9\n").find("f:3") != std::string::npos);  // out of range
  CHECK(parse_err("4 3\n2 1 0\n").find("f:2") != std::string::npos);       // not increasing
  CHECK(parse_err("nope\n").find("f:1") != std::string::npos);             // bad header
  CHECK(parse_err("").find("missing header") != std::string::npos);

  // comments and blank lines are fine
  std::istringstream commented("# degrees\n\n4 3\n# one edge\n0 1 3\n");
  CHECK(Hypergraph::parse(commented, "mem").edge_count() == 1);
}
