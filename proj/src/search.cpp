#include "hampow/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "hampow/enumeration.hpp"

namespace hampow {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::not_found: return "not_found";
    case SearchStatus::timeout: return "timeout";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

// Sorted packed edge keys for O(log m) membership when vertices fit 6 bits.
class EdgeKeySet {
 public:
  EdgeKeySet(const Hypergraph& h) : h_(&h), packable_(h.vertex_count() <= 64 && h.uniformity() <= 10) {
    if (!packable_) return;
    keys_.reserve(h.edge_count());
    for (const auto& e : h.edges()) keys_.push_back(pack(e.data(), e.size()));
    std::sort(keys_.begin(), keys_.end());
  }

  bool contains(const int* sorted_vertices, std::size_t r) const {
    if (packable_) {
      std::uint64_t key = pack(sorted_vertices, r);
      return std::binary_search(keys_.begin(), keys_.end(), key);
    }
    return h_->has_edge({sorted_vertices, r});
  }

 private:
  static std::uint64_t pack(const int* v, std::size_t r) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < r; ++i) key = (key << 6) | static_cast<std::uint64_t>(v[i]);
    return key;
  }
  const Hypergraph* h_;
  bool packable_;
  std::vector<std::uint64_t> keys_;
};

struct Searcher {
  const Hypergraph& h;
  const int n, r, k, span;  // span = k+r-2
  const EdgeKeySet keys;
  SearchBudget budget;

  // per depth: position sets completed by placing that position, as the
  // r-1 companion positions of the new one
  std::vector<std::vector<std::vector<int>>> companions;

  std::vector<int> place;     // position -> vertex, -1 if open
  std::vector<bool> used;     // vertex placed
  Bitset dead;                // vertices at positions whose window role is over
  std::vector<int> edge_dead;  // per edge: how many dead vertices it touches
  std::vector<long> live_degree;  // per vertex: edges with no dead vertex
  long degree_needed;             // final cycle degree of every vertex
  std::vector<int> scratch;   // sorted candidate edge
  std::uint64_t nodes = 0;
  // restart episodes: deterministic geometric schedule with reshuffled
  // tie-breaking, a standard remedy for heavy-tailed backtracking runs
  std::uint64_t episode_nodes = 0;
  std::uint64_t episode_limit = 0;  // 0 = unbounded
  std::uint64_t episode_seed = 0;
  bool episode_exhausted = false;
  Clock::time_point t0;
  Clock::time_point deadline;
  bool timed_out = false;
  std::optional<CyclicPermutation> witness;

  Searcher(const Hypergraph& hg, int kk, const SearchBudget& b)
      : h(hg),
        n(hg.vertex_count()),
        r(hg.uniformity()),
        k(kk),
        span(kk + hg.uniformity() - 2),
        keys(hg),
        budget(b),
        place(static_cast<std::size_t>(n), -1),
        used(static_cast<std::size_t>(n), false),
        dead(static_cast<std::size_t>(n)),
        edge_dead(hg.edge_count(), 0),
        live_degree(static_cast<std::size_t>(n), 0),
        scratch(static_cast<std::size_t>(hg.uniformity())) {
    for (int v = 0; v < n; ++v)
      live_degree[static_cast<std::size_t>(v)] =
          static_cast<long>(hg.incident_edges(v).size());
    degree_needed =
        r * static_cast<long>(binom_u64(k + r - 2, r - 1));
    build_companion_table();
  }

  // closing-position lookahead: vertices that can still legally occupy
  // position n-1, judged by the wrap subsets determined by the head prefix
  Bitset closing_set;
  long closing_left = 0;
  bool closing_active = false;
  std::vector<std::vector<int>> head_only_subsets;  // companions of n-1 within the head

  // For each position i, the (r-1)-sets of earlier (or wrapped-head)
  // positions that together with i span at most k+r-1 consecutive cyclic
  // positions. Checking exactly these at each placement covers every
  // r-subset of every window once.
  void build_companion_table() {
    companions.resize(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) {
      std::vector<int> candidates;
      for (int q = std::max(0, i - span); q < i; ++q) candidates.push_back(q);
      for (int q = 0; q <= i + span - n; ++q) candidates.push_back(q);
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      auto& out = companions[static_cast<std::size_t>(i)];
      if (static_cast<int>(candidates.size()) < r - 1) continue;
      for_each_combination(candidates.size(), static_cast<std::size_t>(r - 1),
                           [&](const std::vector<std::size_t>& pick) {
                             std::vector<int> posset;
                             posset.reserve(static_cast<std::size_t>(r));
                             for (auto idx : pick) posset.push_back(candidates[idx]);
                             posset.push_back(i);
                             std::sort(posset.begin(), posset.end());
                             int max_gap = n - posset.back() + posset.front();
                             for (std::size_t j = 1; j < posset.size(); ++j)
                               max_gap = std::max(max_gap, posset[j] - posset[j - 1]);
                             if (n - max_gap > span) return;
                             posset.erase(std::find(posset.begin(), posset.end(), i));
                             out.push_back(std::move(posset));
                           });
    }
  }

  void prepare_closing_set() {
    if (head_only_subsets.empty()) {
      for (const auto& posset : companions[static_cast<std::size_t>(n - 1)]) {
        bool head_only = true;
        for (int q : posset)
          if (q >= span) head_only = false;
        if (head_only) head_only_subsets.push_back(posset);
      }
    }
    closing_set = Bitset(static_cast<std::size_t>(n));
    closing_left = 0;
    for (int v = 1; v < n; ++v) {
      if (v <= place[1]) continue;  // reflection symmetry at the last position
      bool ok = true;
      for (const auto& posset : head_only_subsets) {
        for (std::size_t j = 0; j < posset.size(); ++j)
          scratch[j] = place[static_cast<std::size_t>(posset[j])];
        scratch[posset.size()] = v;
        std::sort(scratch.begin(), scratch.end());
        if (!keys.contains(scratch.data(), scratch.size())) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      closing_set.set(static_cast<std::size_t>(v));
      if (!used[static_cast<std::size_t>(v)]) ++closing_left;
    }
    closing_active = true;
  }

  bool over_budget() {
    if (timed_out) return true;
    if (budget.node_limit && nodes > *budget.node_limit) {
      timed_out = true;
      return true;
    }
    if (budget.time_limit_seconds && (nodes & 1023) == 0 && Clock::now() > deadline) {
      timed_out = true;
      return true;
    }
    return false;
  }

  bool placement_ok(int i, int v) {
    for (const auto& posset : companions[static_cast<std::size_t>(i)]) {
      for (std::size_t j = 0; j < posset.size(); ++j)
        scratch[j] = place[static_cast<std::size_t>(posset[j])];
      scratch[posset.size()] = v;
      std::sort(scratch.begin(), scratch.end());
      if (!keys.contains(scratch.data(), scratch.size())) return false;
    }
    return true;
  }

  // Retiring a vertex removes its edges from every live-degree pool. A future
  // placement can only ever check edges free of dead vertices, and each
  // unplaced vertex still owes its full cycle degree, so any unplaced vertex
  // whose pool drops below that is a dead end.
  void kill(int w) {
    dead.set(static_cast<std::size_t>(w));
    for (auto e : h.incident_edges(w))
      if (edge_dead[e]++ == 0)
        for (int u : h.edge(e)) --live_degree[static_cast<std::size_t>(u)];
  }

  void revive(int w) {
    dead.reset(static_cast<std::size_t>(w));
    for (auto e : h.incident_edges(w))
      if (--edge_dead[e] == 0)
        for (int u : h.edge(e)) ++live_degree[static_cast<std::size_t>(u)];
  }

  bool unplaced_vertex_starved() const {
    for (int v = 0; v < n; ++v)
      if (!used[static_cast<std::size_t>(v)] && live_degree[static_cast<std::size_t>(v)] < degree_needed)
        return true;
    return false;
  }

  bool extend(int i) {
    if (i == n) {
      witness = CyclicPermutation::canonical_from(place);
      return true;
    }
    if (over_budget()) return false;
    if (episode_limit && episode_nodes > episode_limit) {
      episode_exhausted = true;
      return false;
    }
    if (i == std::max(span, 2)) prepare_closing_set();  // head prefix and place[1] both fixed

    // Fail-first: scarce vertices first. Later episodes blur the degree key
    // and reshuffle ties so restarts explore genuinely different orderings.
    const int blur = static_cast<int>(std::min<std::uint64_t>(episode_seed, 20));
    std::vector<std::pair<std::pair<long, std::uint64_t>, int>> candidates;
    for (int v = 1; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      if (i == n - 1 && v < place[1]) continue;  // reflection symmetry
      if (!placement_ok(i, v)) continue;
      std::uint64_t tiebreak =
          episode_seed == 0 ? static_cast<std::uint64_t>(v)
                            : mix64(episode_seed ^ static_cast<std::uint64_t>(v) << 8);
      candidates.push_back({{live_degree[static_cast<std::size_t>(v)] >> blur, tiebreak}, v});
    }
    std::sort(candidates.begin(), candidates.end());

    // the vertex leaving the live window once depth advances past i
    int retiring = i - span;
    bool retire = retiring >= span && retiring < n - span;
    bool track_closing = closing_active && i >= std::max(span, 2) && i < n - 1;
    for (auto [key, v] : candidates) {
      ++nodes;
      ++episode_nodes;
      bool closes = track_closing && closing_set.test(static_cast<std::size_t>(v));
      place[static_cast<std::size_t>(i)] = v;
      used[static_cast<std::size_t>(v)] = true;
      if (closes) --closing_left;
      if (retire) kill(place[static_cast<std::size_t>(retiring)]);
      bool viable = !(closes && closing_left == 0) && !(retire && unplaced_vertex_starved());
      bool done = viable && extend(i + 1);
      if (retire) revive(place[static_cast<std::size_t>(retiring)]);
      if (closes) ++closing_left;
      used[static_cast<std::size_t>(v)] = false;
      place[static_cast<std::size_t>(i)] = -1;
      if (done) return true;
      if (timed_out || episode_exhausted) return false;
    }
    return false;
  }

  SearchOutcome run() {
    t0 = Clock::now();
    if (budget.time_limit_seconds)
      deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                          std::chrono::duration<double>(*budget.time_limit_seconds));
    SearchOutcome out;
    place[0] = 0;
    used[0] = true;
    bool found = false;
    std::uint64_t base = 512 * static_cast<std::uint64_t>(n);
    for (std::uint64_t episode = 0;; ++episode) {
      episode_seed = episode;
      episode_nodes = 0;
      episode_exhausted = false;
      episode_limit = episode < 40 ? base << episode : 0;
      found = extend(1);
      if (found || timed_out || !episode_exhausted) break;
    }
    out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    out.nodes_expanded = nodes;
    if (found) {
      out.status = SearchStatus::found;
      out.witness = witness;
    } else {
      out.status = timed_out ? SearchStatus::timeout : SearchStatus::not_found;
    }
    return out;
  }
};

}  // namespace

SearchOutcome contains_power_cycle(const Hypergraph& h, int k, const SearchBudget& budget) {
  PowerCycleParams params(h.vertex_count(), h.uniformity(), k);  // validates ranges

  // necessary conditions: edge count and minimum degree of the target cycle
  if (static_cast<long>(h.edge_count()) < params.edge_count())
    return SearchOutcome{SearchStatus::not_found, std::nullopt, 0, 0.0};
  for (int v = 0; v < h.vertex_count(); ++v)
    if (static_cast<long>(h.incident_edges(v).size()) < params.max_degree())
      return SearchOutcome{SearchStatus::not_found, std::nullopt, 0, 0.0};

  Searcher searcher(h, k, budget);
  return searcher.run();
}

SearchOutcome brute_force_contains(const Hypergraph& h, int k, int guard_max_n) {
  PowerCycleParams params(h.vertex_count(), h.uniformity(), k);
  const int n = params.n;
  const int r = params.r;
  const int w = params.window_size();
  if (n > guard_max_n)
    throw GuardError("brute_force_contains: n = " + std::to_string(n) +
                     " above the guard n <= " + std::to_string(guard_max_n));

  EdgeKeySet keys(h);
  auto t0 = Clock::now();
  QnEnumerator qn(n, guard_max_n);
  std::uint64_t tested = 0;
  std::vector<int> edge(static_cast<std::size_t>(r));
  std::vector<int> window(static_cast<std::size_t>(w));
  while (auto tau = qn.next()) {
    ++tested;
    const auto& order = tau->order();
    bool all_present = true;
    // every r-subset of every window; duplicates are harmless here
    for (int start = 0; start < n && all_present; ++start) {
      for (int j = 0; j < w; ++j)
        window[static_cast<std::size_t>(j)] = order[static_cast<std::size_t>((start + j) % n)];
      for_each_combination(static_cast<std::size_t>(w), static_cast<std::size_t>(r),
                           [&](const std::vector<std::size_t>& pick) {
                             if (!all_present) return;
                             for (std::size_t j = 0; j < pick.size(); ++j)
                               edge[j] = window[pick[j]];
                             std::sort(edge.begin(), edge.end());
                             if (!keys.contains(edge.data(), edge.size())) all_present = false;
                           });
    }
    if (all_present) {
      double dt = std::chrono::duration<double>(Clock::now() - t0).count();
      return SearchOutcome{SearchStatus::found, *tau, tested, dt};
    }
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  return SearchOutcome{SearchStatus::not_found, std::nullopt, tested, dt};
}

}  // namespace hampow
