#include "hampow/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hampow {

CyclicPermutation CyclicPermutation::canonical_from(std::vector<int> order) {
  const int n = static_cast<int>(order.size());
  if (n < 3) throw std::invalid_argument("cyclic permutation needs at least 3 elements");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : order) {
    if (v < 0 || v >= n) throw std::invalid_argument("cyclic permutation: value out of range");
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("cyclic permutation: repeated value");
    seen[static_cast<std::size_t>(v)] = true;
  }
  auto zero = std::find(order.begin(), order.end(), 0);
  std::rotate(order.begin(), zero, order.end());
  if (order[1] > order[static_cast<std::size_t>(n - 1)])
    std::reverse(order.begin() + 1, order.end());
  return CyclicPermutation(std::move(order));
}

CyclicPermutation CyclicPermutation::identity(int n) {
  if (n < 3) throw std::invalid_argument("cyclic permutation needs at least 3 elements");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return CyclicPermutation(std::move(order));
}

PowerCycleParams::PowerCycleParams(int n_, int r_, int k_) : n(n_), r(r_), k(k_) {
  if (r < 2) throw std::invalid_argument("power cycle: r must be >= 2");
  if (k < 1) throw std::invalid_argument("power cycle: k must be >= 1");
  if (n < 2 * (k + r - 1))
    throw std::invalid_argument("power cycle: need n >= 2(k+r-1) = " +
                                std::to_string(2 * (k + r - 1)) +
                                ", got n = " + std::to_string(n));
}

long PowerCycleParams::edges_per_vertex() const {
  return static_cast<long>(binom_u64(k + r - 2, r - 1));
}

long PowerCycleParams::edge_count() const { return edges_per_vertex() * n; }

long PowerCycleParams::max_degree() const { return r * edges_per_vertex(); }

QnEnumerator::QnEnumerator(int n, int guard_max_n) : n_(n) {
  if (n < 3) throw std::invalid_argument("Q_n requires n >= 3");
  if (n > guard_max_n)
    throw GuardError("Q_n sweep at n = " + std::to_string(n) + " needs (n-1)!/2 = " +
                     QnEnumerator::count(n).get_str() +
                     " permutations, above the guard n <= " + std::to_string(guard_max_n));
  tail_.resize(static_cast<std::size_t>(n - 1));
  std::iota(tail_.begin(), tail_.end(), 1);
}

std::optional<CyclicPermutation> QnEnumerator::next() {
  while (!done_) {
    bool canonical = tail_is_canonical(tail_);
    std::vector<int> order;
    if (canonical) {
      order.reserve(static_cast<std::size_t>(n_));
      order.push_back(0);
      order.insert(order.end(), tail_.begin(), tail_.end());
    }
    done_ = !std::next_permutation(tail_.begin(), tail_.end());
    if (canonical) return CyclicPermutation::canonical_from(std::move(order));
  }
  return std::nullopt;
}

Integer QnEnumerator::count(int n) {
  if (n < 3) throw std::invalid_argument("Q_n requires n >= 3");
  return factorial_integer(n - 1) / 2;
}

bool QnEnumerator::tail_is_canonical(const std::vector<int>& tail) {
  return tail.front() < tail.back();
}

std::uint64_t QnEnumerator::tail_count(int n) { return factorial_u64(n - 1); }

std::vector<int> QnEnumerator::tail_at_rank(int n, std::uint64_t rank) {
  // factorial number system unranking over values 1..n-1
  const int len = n - 1;
  std::vector<int> pool(static_cast<std::size_t>(len));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(len));
  for (int i = len; i >= 1; --i) {
    std::uint64_t f = factorial_u64(i - 1);
    std::size_t j = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[j]);
    pool.erase(pool.begin() + static_cast<long>(j));
  }
  return out;
}

namespace {

// All r-subsets of every (k+r-1)-window along the ordering.
std::vector<Edge> window_edges(const std::vector<int>& order, int n, int r, int k, bool cyclic) {
  const int w = k + r - 1;
  std::set<Edge> edges;
  const int last_start = cyclic ? n - 1 : n - w;
  for (int start = 0; start <= last_start; ++start) {
    Edge window;
    window.reserve(static_cast<std::size_t>(w));
    for (int j = start; j < start + w; ++j)
      window.push_back(order[static_cast<std::size_t>(j % n)]);
    std::vector<std::size_t> pick(static_cast<std::size_t>(r));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      Edge e;
      e.reserve(static_cast<std::size_t>(r));
      for (auto idx : pick) e.push_back(window[idx]);
      std::sort(e.begin(), e.end());
      edges.insert(std::move(e));
      int i = r - 1;
      while (i >= 0 &&
             pick[static_cast<std::size_t>(i)] == window.size() - static_cast<std::size_t>(r - i))
        --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < r; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return {edges.begin(), edges.end()};
}

}  // namespace

Hypergraph build_power_cycle(const CyclicPermutation& sigma, const PowerCycleParams& params) {
  if (sigma.size() != params.n)
    throw std::invalid_argument("build_power_cycle: permutation size does not match n");
  auto edges = window_edges(sigma.order(), params.n, params.r, params.k, true);
  Hypergraph h(params.n, params.r, std::move(edges));
  if (static_cast<long>(h.edge_count()) != params.edge_count())
    throw std::logic_error("power cycle edge count mismatch");
  return h;
}

Hypergraph build_power_path(int path_vertices, int r, int k) {
  if (r < 2 || k < 1) throw std::invalid_argument("power path: need r >= 2 and k >= 1");
  if (path_vertices < k + r - 1)
    throw std::invalid_argument("power path: need at least k+r-1 = " +
                                std::to_string(k + r - 1) + " vertices");
  std::vector<int> order(static_cast<std::size_t>(path_vertices));
  std::iota(order.begin(), order.end(), 0);
  auto edges = window_edges(order, path_vertices, r, k, false);
  Hypergraph h(path_vertices, r, std::move(edges));
  if (static_cast<long>(h.edge_count()) != power_path_edge_count(path_vertices, r, k))
    throw std::logic_error("power path edge count mismatch");
  return h;
}

long power_cycle_edge_count(int n, int r, int k) {
  PowerCycleParams params(n, r, k);
  return params.edge_count();
}

long power_cycle_max_degree(int r, int k) {
  if (r < 2 || k < 1) throw std::invalid_argument("need r >= 2 and k >= 1");
  return r * static_cast<long>(binom_u64(k + r - 2, r - 1));
}

long power_path_edge_count(int path_vertices, int r, int k) {
  if (r < 2 || k < 1) throw std::invalid_argument("need r >= 2 and k >= 1");
  if (path_vertices < k + r - 1)
    throw std::invalid_argument("power path: need at least k+r-1 vertices");
  return static_cast<long>(binom_u64(k + r - 1, r)) +
         static_cast<long>(path_vertices - (k + r - 1)) *
             static_cast<long>(binom_u64(k + r - 2, r - 1));
}

}  // namespace hampow
