// hampow command-line front end. Talks to the library exclusively through the
// C interface in hampow.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hampow.h"

namespace {

struct StringOut {
  char* value = nullptr;
  ~StringOut() { hp_string_free(value); }
};

struct GraphOut {
  hp_hypergraph* value = nullptr;
  ~GraphOut() { hp_hypergraph_free(value); }
};

int fail(hp_status status) {
  std::cerr << "error: " << hp_last_error() << "\n";
  return status == HP_ERR_GUARD ? 4 : 3;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw CLI::RuntimeError("cannot open " + out_path, 3);
  out << text;
}

int default_threads() {
  if (const char* env = std::getenv("HAMPOW_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

std::vector<double> parse_grid(const std::string& spec) {
  // LO:HI:STEP inclusive
  double lo, hi, step;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0 || hi < lo)
    throw CLI::ValidationError("--c-grid", "expected LO:HI:STEP with positive STEP");
  std::vector<double> grid;
  for (double c = lo; c <= hi + step * 1e-9; c += step) grid.push_back(c);
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and Monte Carlo exploration of powers of tight Hamilton cycles in random "
               "uniform hypergraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = default_threads();
  app.add_option("--threads", threads, "worker threads for sweeps and scans")
      ->capture_default_str();

  // constants
  auto* constants = app.add_subcommand("constants", "threshold constants and structural formulas");
  int c_r = 3, c_k = 1;
  constants->add_option("--r", c_r, "uniformity")->required();
  constants->add_option("--k", c_k, "power")->required();

  // build-cycle
  auto* build = app.add_subcommand("build-cycle", "write a power cycle as a hypergraph file");
  int b_n = 0, b_r = 3, b_k = 1;
  std::string b_perm, b_out;
  build->add_option("--n", b_n, "vertex count")->required();
  build->add_option("--r", b_r, "uniformity")->required();
  build->add_option("--k", b_k, "power")->required();
  build->add_option("--perm", b_perm, "comma-separated ordering (default identity)");
  build->add_option("-o,--out", b_out, "output file")->required();

  // overlap
  auto* overlap = app.add_subcommand("overlap", "exact overlap histogram over all cyclic orderings");
  int o_n = 0, o_r = 3, o_k = 1, o_guard = 0;
  std::string o_out;
  overlap->add_option("--n", o_n)->required();
  overlap->add_option("--r", o_r)->required();
  overlap->add_option("--k", o_k)->required();
  overlap->add_option("--max-qn-n", o_guard, "override the n guard for the (n-1)!/2 sweep (costly)");
  overlap->add_option("--out", o_out, "CSV output file (default stdout)");

  // profiles
  auto* profiles = app.add_subcommand("profiles", "exact (b,s) census of cycle edge subsets");
  int p_n = 0, p_r = 3, p_k = 1;
  long p_bmax = 3, p_guard = 0;
  std::string p_out;
  profiles->add_option("--n", p_n)->required();
  profiles->add_option("--r", p_r)->required();
  profiles->add_option("--k", p_k)->required();
  profiles->add_option("--b-max", p_bmax, "largest subset size")->required();
  profiles->add_option("--max-subsets", p_guard, "override the per-b subset guard (costly)");
  profiles->add_option("--out", p_out, "CSV output file (default stdout)");

  // second-moment
  auto* moment = app.add_subcommand("second-moment", "exact E[X], E[X^2] and the overlap sum");
  int m_n = 0, m_r = 3, m_k = 1, m_guard = 0;
  std::string m_p;
  moment->add_option("--n", m_n)->required();
  moment->add_option("--r", m_r)->required();
  moment->add_option("--k", m_k)->required();
  moment->add_option("--p", m_p, "edge probability as a rational, e.g. 1/2 or 0.3")->required();
  moment->add_option("--max-qn-n", m_guard, "override the n guard for the (n-1)!/2 sweep (costly)");

  // exact-prob
  auto* exact = app.add_subcommand("exact-prob", "exact containment probability on micro instances");
  int e_n = 6, e_r = 3, e_k = 1;
  long e_guard = 0;
  std::string e_p;
  exact->add_option("--n", e_n)->capture_default_str();
  exact->add_option("--r", e_r)->capture_default_str();
  exact->add_option("--k", e_k)->capture_default_str();
  exact->add_option("--p", e_p, "edge probability as a rational")->required();
  exact->add_option("--max-rsets", e_guard, "override the binom(n,r) guard (cost 2^binom)");

  // search
  auto* search = app.add_subcommand("search", "decide spanning power-cycle containment");
  std::string s_input;
  int s_k = 1;
  double s_timeout = 30.0;
  search->add_option("--input", s_input, "hypergraph file")->required();
  search->add_option("--k", s_k, "power")->required();
  search->add_option("--timeout", s_timeout, "seconds; 0 disables the limit")
      ->capture_default_str();

  // scan
  auto* scan = app.add_subcommand("scan", "Monte Carlo containment scan over a C grid");
  int sc_n = 0, sc_r = 3, sc_k = 1;
  long sc_trials = 100;
  std::uint64_t sc_seed = 0;
  double sc_timeout = 30.0;
  std::string sc_grid, sc_out;
  scan->add_option("--n", sc_n)->required();
  scan->add_option("--r", sc_r)->required();
  scan->add_option("--k", sc_k)->required();
  scan->add_option("--c-grid", sc_grid, "LO:HI:STEP")->required();
  scan->add_option("--trials", sc_trials, "trials per grid point")->capture_default_str();
  scan->add_option("--seed", sc_seed, "master seed")->required();
  scan->add_option("--timeout", sc_timeout, "per-trial search budget in seconds")
      ->capture_default_str();
  scan->add_option("--out", sc_out, "CSV output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "run an invariant battery");
  std::string v_suite = "all";
  std::uint64_t v_seed = 20240817;
  long v_tight = 0, v_square = 0;
  verify->add_option("--suite", v_suite, "facts | bounds | moments | search | all")
      ->capture_default_str();
  verify->add_option("--seed", v_seed, "seed for the randomized batteries")->capture_default_str();
  verify->add_option("--search-instances-tight", v_tight, "instance count at (10,3,1)");
  verify->add_option("--search-instances-square", v_square, "instance count at (9,3,2)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*constants) {
      StringOut json;
      if (auto st = hp_constants_json(c_r, c_k, &json.value); st != HP_OK) return fail(st);
      emit(json.value, "");
    } else if (*build) {
      std::vector<int> perm;
      if (!b_perm.empty()) {
        std::string token;
        std::istringstream in(b_perm);
        while (std::getline(in, token, ',')) perm.push_back(std::stoi(token));
      }
      GraphOut g;
      if (auto st = hp_build_power_cycle(b_n, b_r, b_k, perm.empty() ? nullptr : perm.data(),
                                         &g.value);
          st != HP_OK)
        return fail(st);
      if (auto st = hp_hypergraph_write_file(g.value, b_out.c_str()); st != HP_OK)
        return fail(st);
    } else if (*overlap) {
      StringOut csv;
      if (auto st = hp_overlap_csv(o_n, o_r, o_k, o_guard, threads, &csv.value); st != HP_OK)
        return fail(st);
      emit(csv.value, o_out);
    } else if (*profiles) {
      StringOut csv;
      if (auto st = hp_profiles_csv(p_n, p_r, p_k, p_bmax, p_guard, &csv.value); st != HP_OK)
        return fail(st);
      emit(csv.value, p_out);
    } else if (*moment) {
      StringOut json;
      if (auto st = hp_second_moment_json(m_n, m_r, m_k, m_p.c_str(), m_guard, threads,
                                          &json.value);
          st != HP_OK)
        return fail(st);
      emit(json.value, "");
    } else if (*exact) {
      StringOut json;
      if (auto st = hp_exact_prob_json(e_n, e_r, e_k, e_p.c_str(), e_guard, threads, &json.value);
          st != HP_OK)
        return fail(st);
      emit(json.value, "");
    } else if (*search) {
      GraphOut g;
      if (auto st = hp_hypergraph_read_file(s_input.c_str(), &g.value); st != HP_OK)
        return fail(st);
      StringOut json;
      int outcome = 0;
      if (auto st = hp_search_json(g.value, s_k, s_timeout, &json.value, &outcome); st != HP_OK)
        return fail(st);
      emit(json.value, "");
      return outcome;  // 0 found, 1 not_found, 2 timeout
    } else if (*scan) {
      auto grid = parse_grid(sc_grid);
      StringOut csv;
      if (auto st = hp_scan_csv(sc_n, sc_r, sc_k, grid.data(), grid.size(), sc_trials, sc_seed,
                                sc_timeout, threads, &csv.value);
          st != HP_OK)
        return fail(st);
      emit(csv.value, sc_out);
    } else if (*verify) {
      StringOut json;
      long failures = 0;
      if (auto st = hp_verify_json(v_suite.c_str(), v_seed, threads, v_tight, v_square,
                                   &json.value, &failures);
          st != HP_OK)
        return fail(st);
      emit(json.value, "");
      return failures == 0 ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
