#include "hampow.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "hampow/random_lab.hpp"
#include "hampow/report_json.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
hp_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const hampow::GuardError& e) {
    g_last_error = e.what();
    return HP_ERR_GUARD;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return HP_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HP_ERR_INTERNAL;
  }
}

hp_status require(bool ok, const char* msg) {
  if (ok) return HP_OK;
  g_last_error = msg;
  return HP_ERR_INVALID_ARGUMENT;
}

hampow::QnSweepOptions sweep_options(int guard_max_n, int workers) {
  hampow::QnSweepOptions opts;
  if (guard_max_n > 0) opts.guard_max_n = guard_max_n;
  if (workers > 0) opts.workers = workers;
  return opts;
}

}  // namespace

struct hp_hypergraph {
  hampow::Hypergraph value;
};

extern "C" {

const char* hp_version(void) { return "0.1.0"; }

const char* hp_last_error(void) { return g_last_error.c_str(); }

void hp_string_free(char* s) { std::free(s); }

hp_status hp_hypergraph_create(int n, int r, const int* edges, size_t edge_count,
                               hp_hypergraph** out) {
  if (require(out != nullptr, "out must not be null") != HP_OK) return HP_ERR_INVALID_ARGUMENT;
  if (require(edges != nullptr || edge_count == 0, "edges must not be null") != HP_OK)
    return HP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    std::vector<hampow::Edge> list;
    list.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i)
      list.emplace_back(edges + i * static_cast<size_t>(r), edges + (i + 1) * static_cast<size_t>(r));
    *out = new hp_hypergraph{hampow::Hypergraph(n, r, std::move(list))};
    return HP_OK;
  });
}

hp_status hp_hypergraph_read_file(const char* path, hp_hypergraph** out) {
  if (require(out && path, "path and out must not be null") != HP_OK)
    return HP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    try {
      *out = new hp_hypergraph{hampow::Hypergraph::read_file(path)};
      return HP_OK;
    } catch (const std::runtime_error& e) {
      g_last_error = e.what();
      return HP_ERR_IO;
    }
  });
}

hp_status hp_hypergraph_write_file(const hp_hypergraph* h, const char* path) {
  if (require(h && path, "hypergraph and path must not be null") != HP_OK)
    return HP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    try {
      h->value.write_file(path);
      return HP_OK;
    } catch (const std::runtime_error& e) {
      g_last_error = e.what();
      return HP_ERR_IO;
    }
  });
}

void hp_hypergraph_free(hp_hypergraph* h) { delete h; }

int hp_hypergraph_vertex_count(const hp_hypergraph* h) { return h ? h->value.vertex_count() : 0; }

int hp_hypergraph_uniformity(const hp_hypergraph* h) { return h ? h->value.uniformity() : 0; }

long hp_hypergraph_edge_count(const hp_hypergraph* h) {
  return h ? static_cast<long>(h->value.edge_count()) : 0;
}

hp_status hp_build_power_cycle(int n, int r, int k, const int* perm, hp_hypergraph** out) {
  if (require(out != nullptr, "out must not be null") != HP_OK) return HP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    hampow::PowerCycleParams params(n, r, k);
    hampow::CyclicPermutation sigma =
        perm ? hampow::CyclicPermutation::canonical_from(std::vector<int>(perm, perm + n))
             : hampow::CyclicPermutation::identity(n);
    *out = new hp_hypergraph{hampow::build_power_cycle(sigma, params)};
    return HP_OK;
  });
}

hp_status hp_constants_json(int r, int k, char** out) {
  if (require(out != nullptr, "out must not be null") != HP_OK) return HP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = dup_string(hampow::constants_json(r, k).dump(2));
    return HP_OK;
  });
}

hp_status hp_overlap_csv(int n, int r, int k, int guard_max_n, int workers, char** out) {
  if (require(out != nullptr, "out must not be null") != HP_OK) return HP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    hampow::PowerCycleParams params(n, r, k);
    auto hist = hampow::overlap_histogram(hampow::CyclicPermutation::identity(n), params,
                                          sweep_options(guard_max_n, workers));
    *out = dup_string(hampow::overlap_csv(hist));
    return HP_OK;
  });
}

hp_status hp_profiles_csv(int n, int r, int k, long b_max, long guard_max_subsets, char** out) {
  if (require(out != nullptr, "out must not be null") != HP_OK) return HP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    hampow::PowerCycleParams params(n, r, k);
    long guard = guard_max_subsets > 0 ? guard_max_subsets : hampow::kDefaultSubsetGuard;
    auto profiles = hampow::subgraph_profiles(params, b_max, guard);
    *out = dup_string(hampow::profiles_csv(profiles, n, r, k));
    return HP_OK;
  });
}

hp_status hp_second_moment_json(int n, int r, int k, const char* p, int guard_max_n, int workers,
                                char** out) {
  if (require(out && p, "p and out must not be null") != HP_OK) return HP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    hampow::PowerCycleParams params(n, r, k);
    auto report = hampow::second_moment_exact(params, hampow::parse_rational(p),
                                              sweep_options(guard_max_n, workers));
    *out = dup_string(hampow::moment_report_json(report).dump(2));
    return HP_OK;
  });
}

hp_status hp_exact_prob_json(int n, int r, int k, const char* p, long guard_max_rsets, int workers,
                             char** out) {
  if (require(out && p, "p and out must not be null") != HP_OK) return HP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    hampow::PowerCycleParams params(n, r, k);
    long guard = guard_max_rsets > 0 ? guard_max_rsets : hampow::kDefaultRsetGuard;
    auto report = hampow::exact_containment_probability(params, hampow::parse_rational(p), guard,
                                                        sweep_options(0, workers));
    *out = dup_string(hampow::exact_probability_json(report).dump(2));
    return HP_OK;
  });
}

hp_status hp_search_json(const hp_hypergraph* h, int k, double timeout_seconds, char** out,
                         int* outcome_out) {
  if (require(h && out, "hypergraph and out must not be null") != HP_OK)
    return HP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    hampow::SearchBudget budget;
    if (timeout_seconds > 0)
      budget.time_limit_seconds = timeout_seconds;
    else
      budget.time_limit_seconds = std::nullopt;
    auto outcome = hampow::contains_power_cycle(h->value, k, budget);
    *out = dup_string(hampow::search_outcome_json(outcome).dump(2));
    if (outcome_out) *outcome_out = static_cast<int>(outcome.status);
    return HP_OK;
  });
}

hp_status hp_scan_csv(int n, int r, int k, const double* c_grid, size_t c_grid_len, long trials,
                      uint64_t seed, double timeout_seconds, int workers, char** out) {
  if (require(out && c_grid && c_grid_len > 0, "need a nonempty C grid and out") != HP_OK)
    return HP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    hampow::ScanConfig config{hampow::PowerCycleParams(n, r, k),
                              std::vector<double>(c_grid, c_grid + c_grid_len),
                              trials,
                              seed,
                              timeout_seconds > 0 ? timeout_seconds : 30.0,
                              workers > 0 ? workers : 1};
    auto points = hampow::run_scan(config);
    std::ostringstream csv;
    hampow::write_scan_csv(csv, config, points);
    *out = dup_string(csv.str());
    return HP_OK;
  });
}

hp_status hp_verify_json(const char* suite, uint64_t seed, int workers,
                         long search_instances_tight, long search_instances_square, char** out,
                         long* failures_out) {
  if (require(suite && out, "suite and out must not be null") != HP_OK)
    return HP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    hampow::VerifyOptions opts;
    opts.seed = seed;
    if (workers > 0) opts.workers = workers;
    if (search_instances_tight > 0) opts.search_instances_tight = search_instances_tight;
    if (search_instances_square > 0) opts.search_instances_square = search_instances_square;
    auto report = hampow::run_verify(suite, opts);
    *out = dup_string(hampow::verify_report_json(report).dump(2));
    if (failures_out) *failures_out = static_cast<long>(report.failures.size());
    return HP_OK;
  });
}

}  // extern "C"
