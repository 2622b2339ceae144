#pragma once

#include <cstdint>
#include <optional>

#include "hampow/cyclic.hpp"
#include "hampow/hypergraph.hpp"

namespace hampow {

enum class SearchStatus { found, not_found, timeout };

struct SearchBudget {
  std::optional<double> time_limit_seconds = 30.0;
  std::optional<std::uint64_t> node_limit = std::nullopt;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::not_found;
  std::optional<CyclicPermutation> witness;
  std::uint64_t nodes_expanded = 0;
  double elapsed_seconds = 0.0;
};

// Does h contain a spanning k-th power of a tight Hamilton cycle?
// Backtracking over partial cyclic orderings anchored at vertex 0, extending
// one position at a time; a placement survives only if every r-subset it
// completes inside some window is an edge. Timeout is an outcome, not an
// error.
SearchOutcome contains_power_cycle(const Hypergraph& h, int k, const SearchBudget& budget = {});

// Validation oracle: tests every canonical cyclic ordering.
SearchOutcome brute_force_contains(const Hypergraph& h, int k, int guard_max_n = 10);

const char* to_string(SearchStatus s);

}  // namespace hampow
