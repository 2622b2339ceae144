#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hampow/hypergraph.hpp"
#include "hampow/numeric.hpp"

namespace hampow {

// Cyclic arrangement of [0,n), canonicalized modulo rotation and reflection:
// order[0] == 0 and order[1] < order[n-1].
class CyclicPermutation {
 public:
  static CyclicPermutation canonical_from(std::vector<int> order);
  static CyclicPermutation identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  int at(int i) const { return order_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const CyclicPermutation& a, const CyclicPermutation& b) {
    return a.order_ == b.order_;
  }
  friend bool operator<(const CyclicPermutation& a, const CyclicPermutation& b) {
    return a.order_ < b.order_;
  }

 private:
  explicit CyclicPermutation(std::vector<int> order) : order_(std::move(order)) {}
  std::vector<int> order_;
};

// Parameters of the k-th power of a tight Hamilton cycle on n vertices.
// n >= 2(k+r-1) keeps the windows distinct, so the closed-form edge count
// holds exactly.
struct PowerCycleParams {
  int n;
  int r;
  int k;

  PowerCycleParams(int n_, int r_, int k_);

  int window_size() const { return k + r - 1; }
  long edges_per_vertex() const;  // binom(k+r-2, r-1)
  long edge_count() const;        // edges_per_vertex() * n
  long max_degree() const;        // r * edges_per_vertex()
};

// Streams canonical cyclic permutations in lexicographic tail order;
// exactly (n-1)!/2 in total.
class QnEnumerator {
 public:
  static constexpr int kDefaultGuard = 12;

  explicit QnEnumerator(int n, int guard_max_n = kDefaultGuard);

  std::optional<CyclicPermutation> next();

  static Integer count(int n);  // (n-1)!/2

  // Random access into the (n-1)! tail permutations (canonical or not),
  // for partitioning a sweep into contiguous chunks. Requires n <= 21.
  static std::vector<int> tail_at_rank(int n, std::uint64_t rank);
  static bool tail_is_canonical(const std::vector<int>& tail);
  static std::uint64_t tail_count(int n);  // (n-1)!

 private:
  int n_;
  bool done_ = false;
  std::vector<int> tail_;
};

// H_sigma: every window of k+r-1 cyclically consecutive vertices of sigma
// spans a complete r-graph; no other edges.
Hypergraph build_power_cycle(const CyclicPermutation& sigma, const PowerCycleParams& params);

// Path analogue on vertices 0..path_vertices-1 in natural order.
Hypergraph build_power_path(int path_vertices, int r, int k);

long power_cycle_edge_count(int n, int r, int k);
long power_cycle_max_degree(int r, int k);
long power_path_edge_count(int path_vertices, int r, int k);

}  // namespace hampow
