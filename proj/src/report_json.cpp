#include "hampow/report_json.hpp"

#include <sstream>

namespace hampow {

using nlohmann::json;

json json_of(const Rational& q) {
  return json{{"rational", rational_to_string(q)}, {"approx", q.get_d()}};
}

json json_of(const LogValue& v) {
  json j{{"ln", v.ln()}};
  double d = v.to_double();
  j["approx"] = std::isfinite(d) ? json(d) : json(nullptr);
  return j;
}

json constants_json(int r, int k) {
  const long binom = static_cast<long>(binom_u64(k + r - 2, r - 1));
  json j;
  j["r"] = r;
  j["k"] = k;
  j["binom_k_r"] = binom;
  j["c"] = constant_c(r, k);
  j["C_prime"] = json_of(constant_Cprime(r, k));
  j["threshold_exponent"] = json_of(threshold_exponent(r, k));
  j["edges_per_vertex"] = binom;  // m(n) = binom * n
  j["m_formula"] = std::to_string(binom) + "*n";
  j["max_degree"] = r * binom;
  j["max_degree_formula"] = std::to_string(r) + "*" + std::to_string(binom);
  if (r >= 3)
    j["C"] = json_of(threshold_constant_C(r, k));
  else
    j["C"] = nullptr;  // threshold constant needs r >= 3
  return j;
}

json moment_report_json(const MomentReport& report) {
  json j;
  j["n"] = report.params.n;
  j["r"] = report.params.r;
  j["k"] = report.params.k;
  j["m"] = report.params.edge_count();
  j["p"] = json_of(report.p);
  j["ex"] = json_of(report.ex);
  j["ex2"] = json_of(report.ex2);
  j["ratio"] = report.ratio ? json_of(*report.ratio) : json(nullptr);
  j["overlap_sum"] = report.overlap_sum ? json_of(*report.overlap_sum) : json(nullptr);
  return j;
}

json exact_probability_json(const ExactProbabilityReport& report) {
  json j;
  j["n"] = report.params.n;
  j["r"] = report.params.r;
  j["k"] = report.params.k;
  j["p"] = json_of(report.p);
  j["prob_contains"] = json_of(report.prob_contains);
  j["pz_bound"] = json_of(report.pz_bound);
  return j;
}

json search_outcome_json(const SearchOutcome& outcome) {
  json j;
  j["status"] = to_string(outcome.status);
  if (outcome.witness)
    j["witness"] = outcome.witness->order();
  else
    j["witness"] = nullptr;
  j["nodes_expanded"] = outcome.nodes_expanded;
  j["elapsed_seconds"] = outcome.elapsed_seconds;
  return j;
}

json verify_report_json(const VerifyReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures)
    failures.push_back(json{{"invariant", f.invariant},
                            {"instance", f.instance},
                            {"expected", f.expected},
                            {"actual", f.actual}});
  return json{{"suite", report.suite},
              {"checks_run", report.checks_run},
              {"failures", failures},
              {"ok", report.ok()}};
}

std::string overlap_csv(const OverlapHistogram& hist) {
  std::ostringstream out;
  out << "b,s,count\n";
  if (auto it = hist.by_b.find(0); it != hist.by_b.end())
    out << "0,0," << it->second.get_str() << "\n";
  for (const auto& [key, count] : hist.by_bs)
    out << key.first << "," << key.second << "," << count.get_str() << "\n";
  return out.str();
}

std::string profiles_csv(const std::vector<SubgraphProfile>& profiles, int n, int r, int k) {
  std::ostringstream out;
  out << "b,s,v_min,count,p1_bound\n";
  char buf[64];
  for (const auto& prof : profiles) {
    std::snprintf(buf, sizeof buf, "%.10g", subgraph_count_bound(n, prof.b, prof.s, r, k).to_double());
    out << prof.b << "," << prof.s << "," << prof.v_min << "," << prof.count.get_str() << ","
        << buf << "\n";
  }
  return out.str();
}

}  // namespace hampow
