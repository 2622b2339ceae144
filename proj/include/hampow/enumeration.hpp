#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hampow/cyclic.hpp"
#include "hampow/hypergraph.hpp"
#include "hampow/numeric.hpp"

namespace hampow {

inline constexpr long kDefaultSubsetGuard = 10'000'000;

struct QnSweepOptions {
  int guard_max_n = QnEnumerator::kDefaultGuard;
  int workers = 1;
};

// Exact overlap counts against a fixed power cycle: by_b[b] is the number of
// canonical cyclic permutations tau whose cycle shares exactly b edges with
// the sigma cycle; by_bs also splits by the component count of the shared
// edge set.
struct OverlapHistogram {
  long m = 0;  // edge count of one cycle
  std::map<long, Integer> by_b;
  std::map<std::pair<long, long>, Integer> by_bs;

  Integer total() const;
  Integer count_b(long b) const;
};

OverlapHistogram overlap_histogram(const CyclicPermutation& sigma, const PowerCycleParams& params,
                                   const QnSweepOptions& opts = {});

struct SubgraphProfile {
  long b;
  long s;
  int v_min;  // smallest vertex support observed for this (b, s)
  Integer count;
};

// Exhaustive profile of edge subsets of the power cycle with 1 <= b <= b_max.
std::vector<SubgraphProfile> subgraph_profiles(const PowerCycleParams& params, long b_max,
                                               long guard_max_subsets = kDefaultSubsetGuard);

// Connected edge subsets of size b whose vertex support contains v.
// b = 0 counts as zero: sums over subhypergraphs start at one edge.
Integer connected_subgraphs_from(const Hypergraph& h, int v, long b,
                                 long guard_max_subsets = kDefaultSubsetGuard);

// Number of canonical cyclic permutations tau whose power cycle contains
// every edge of p.
Integer count_extensions(const EdgeSubset& p, const PowerCycleParams& params,
                         const QnSweepOptions& opts = {});

// Lexicographic combination visitor; fn receives the index vector.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    fn(static_cast<const std::vector<std::size_t>&>(pick));
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - (k - i) - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace hampow
