#include "hampow/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace hampow {

Integer OverlapHistogram::total() const {
  Integer t = 0;
  for (const auto& [b, c] : by_b) t += c;
  return t;
}

Integer OverlapHistogram::count_b(long b) const {
  auto it = by_b.find(b);
  return it == by_b.end() ? Integer(0) : it->second;
}

namespace {

// Calls fn(order) for every canonical cyclic permutation whose tail rank lies
// in [lo, hi). order[0] is always 0.
template <typename Fn>
void scan_tail_range(int n, std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
  if (lo >= hi) return;
  std::vector<int> tail = QnEnumerator::tail_at_rank(n, lo);
  std::vector<int> order(static_cast<std::size_t>(n));
  order[0] = 0;
  for (std::uint64_t t = lo; t < hi; ++t) {
    if (QnEnumerator::tail_is_canonical(tail)) {
      std::copy(tail.begin(), tail.end(), order.begin() + 1);
      fn(const_cast<const std::vector<int>&>(order));
    }
    std::next_permutation(tail.begin(), tail.end());
  }
}

// Partitions the (n-1)! tail ranks into contiguous chunks, runs make_acc/body
// per chunk, then folds the per-chunk accumulators in chunk order. Results do
// not depend on the worker count.
template <typename Acc, typename Body>
std::vector<Acc> run_qn_chunks(int n, int workers, Body&& body) {
  std::uint64_t total = QnEnumerator::tail_count(n);
  int chunks = std::max(1, workers);
  if (static_cast<std::uint64_t>(chunks) > total) chunks = static_cast<int>(total);
  std::vector<Acc> accs(static_cast<std::size_t>(chunks));
  if (chunks == 1) {
    body(0, total, accs[0]);
    return accs;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(chunks));
  for (int c = 0; c < chunks; ++c) {
    std::uint64_t lo = total * static_cast<std::uint64_t>(c) / static_cast<std::uint64_t>(chunks);
    std::uint64_t hi =
        total * static_cast<std::uint64_t>(c + 1) / static_cast<std::uint64_t>(chunks);
    pool.emplace_back([&, c, lo, hi] { body(lo, hi, accs[static_cast<std::size_t>(c)]); });
  }
  for (auto& t : pool) t.join();
  return accs;
}

// Positions of an edge under the inverse permutation fit in one window iff
// the cyclic span of the position set is at most k+r-2.
bool fits_in_window(const std::vector<int>& sorted_positions, int n, int window_span) {
  int max_gap = n - sorted_positions.back() + sorted_positions.front();
  for (std::size_t i = 1; i < sorted_positions.size(); ++i)
    max_gap = std::max(max_gap, sorted_positions[i] - sorted_positions[i - 1]);
  return n - max_gap <= window_span;
}

struct HistAcc {
  std::map<long, Integer> by_b;
  std::map<std::pair<long, long>, Integer> by_bs;
};

}  // namespace

OverlapHistogram overlap_histogram(const CyclicPermutation& sigma, const PowerCycleParams& params,
                                   const QnSweepOptions& opts) {
  if (sigma.size() != params.n)
    throw std::invalid_argument("overlap_histogram: permutation size does not match n");
  QnEnumerator guard_check(params.n, opts.guard_max_n);  // validates n and the guard
  const Hypergraph h_sigma = build_power_cycle(sigma, params);
  const int n = params.n;
  const int span = params.window_size() - 1;

  auto body = [&](std::uint64_t lo, std::uint64_t hi, HistAcc& acc) {
    std::vector<int> pos(static_cast<std::size_t>(n));
    std::vector<int> edge_pos;
    std::vector<std::size_t> shared;
    scan_tail_range(n, lo, hi, [&](const std::vector<int>& order) {
      for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
      shared.clear();
      for (std::size_t j = 0; j < h_sigma.edge_count(); ++j) {
        edge_pos.clear();
        for (int v : h_sigma.edge(j)) edge_pos.push_back(pos[static_cast<std::size_t>(v)]);
        std::sort(edge_pos.begin(), edge_pos.end());
        if (fits_in_window(edge_pos, n, span)) shared.push_back(j);
      }
      long b = static_cast<long>(shared.size());
      acc.by_b[b] += 1;
      if (b > 0) {
        long s = component_count_of(h_sigma, shared);
        acc.by_bs[{b, s}] += 1;
      }
    });
  };

  auto accs = run_qn_chunks<HistAcc>(n, opts.workers, body);
  OverlapHistogram hist;
  hist.m = params.edge_count();
  for (auto& acc : accs) {
    for (auto& [b, c] : acc.by_b) hist.by_b[b] += c;
    for (auto& [bs, c] : acc.by_bs) hist.by_bs[bs] += c;
  }
  return hist;
}

std::vector<SubgraphProfile> subgraph_profiles(const PowerCycleParams& params, long b_max,
                                               long guard_max_subsets) {
  const Hypergraph h = build_power_cycle(CyclicPermutation::identity(params.n), params);
  const long m = static_cast<long>(h.edge_count());
  b_max = std::min(b_max, m);
  std::map<std::pair<long, long>, SubgraphProfile> acc;
  for (long b = 1; b <= b_max; ++b) {
    Integer cost = binom_integer(m, b);
    if (cost > guard_max_subsets)
      throw GuardError("subgraph_profiles: binom(" + std::to_string(m) + "," + std::to_string(b) +
                       ") = " + cost.get_str() + " subsets exceed the guard of " +
                       std::to_string(guard_max_subsets));
    for_each_combination(static_cast<std::size_t>(m), static_cast<std::size_t>(b),
                         [&](const std::vector<std::size_t>& pick) {
                           long s = component_count_of(h, pick);
                           Bitset support(static_cast<std::size_t>(h.vertex_count()));
                           for (auto i : pick) support |= h.edge_mask(i);
                           int v = static_cast<int>(support.count());
                           auto it =
                               acc.try_emplace({b, s}, SubgraphProfile{b, s, v, Integer(0)}).first;
                           it->second.count += 1;
                           it->second.v_min = std::min(it->second.v_min, v);
                         });
  }
  std::vector<SubgraphProfile> out;
  out.reserve(acc.size());
  for (auto& [key, profile] : acc) out.push_back(std::move(profile));
  return out;
}

Integer connected_subgraphs_from(const Hypergraph& h, int v, long b, long guard_max_subsets) {
  if (v < 0 || v >= h.vertex_count())
    throw std::invalid_argument("connected_subgraphs_from: vertex out of range");
  if (b < 0) throw std::invalid_argument("connected_subgraphs_from: b must be >= 0");
  if (b == 0) return 0;  // no empty connected subhypergraph
  const long m = static_cast<long>(h.edge_count());
  if (b > m) return 0;
  Integer cost = binom_integer(m, b);
  if (cost > guard_max_subsets)
    throw GuardError("connected_subgraphs_from: binom(" + std::to_string(m) + "," +
                     std::to_string(b) + ") = " + cost.get_str() + " subsets exceed the guard of " +
                     std::to_string(guard_max_subsets));
  Integer count = 0;
  for_each_combination(static_cast<std::size_t>(m), static_cast<std::size_t>(b),
                       [&](const std::vector<std::size_t>& pick) {
                         bool covers = false;
                         for (auto i : pick)
                           if (h.edge_mask(i).test(static_cast<std::size_t>(v))) {
                             covers = true;
                             break;
                           }
                         if (!covers) return;
                         if (component_count_of(h, pick) == 1) count += 1;
                       });
  return count;
}

Integer count_extensions(const EdgeSubset& p, const PowerCycleParams& params,
                         const QnSweepOptions& opts) {
  const Hypergraph& parent = p.parent();
  if (parent.vertex_count() != params.n)
    throw std::invalid_argument("count_extensions: parent vertex count does not match n");
  QnEnumerator guard_check(params.n, opts.guard_max_n);
  const int n = params.n;
  const int span = params.window_size() - 1;
  const auto indices = p.indices();

  auto body = [&](std::uint64_t lo, std::uint64_t hi, Integer& acc) {
    std::vector<int> pos(static_cast<std::size_t>(n));
    std::vector<int> edge_pos;
    scan_tail_range(n, lo, hi, [&](const std::vector<int>& order) {
      for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
      for (auto j : indices) {
        edge_pos.clear();
        for (int v : parent.edge(j)) edge_pos.push_back(pos[static_cast<std::size_t>(v)]);
        std::sort(edge_pos.begin(), edge_pos.end());
        if (!fits_in_window(edge_pos, n, span)) return;
      }
      acc += 1;
    });
  };

  auto accs = run_qn_chunks<Integer>(n, opts.workers, body);
  Integer total = 0;
  for (auto& acc : accs) total += acc;
  return total;
}

}  // namespace hampow
