#pragma once

#include <string>

#include <json.hpp>

#include "hampow/bounds.hpp"
#include "hampow/moments.hpp"
#include "hampow/search.hpp"
#include "hampow/verify.hpp"

namespace hampow {

// Serialization conventions: exact rationals as "num/den" strings with a
// float shadow, log-domain values as {"ln": x}.
nlohmann::json json_of(const Rational& q);
nlohmann::json json_of(const LogValue& v);

nlohmann::json constants_json(int r, int k);
nlohmann::json moment_report_json(const MomentReport& report);
nlohmann::json exact_probability_json(const ExactProbabilityReport& report);
nlohmann::json search_outcome_json(const SearchOutcome& outcome);
nlohmann::json verify_report_json(const VerifyReport& report);

std::string overlap_csv(const OverlapHistogram& hist);
std::string profiles_csv(const std::vector<SubgraphProfile>& profiles, int n, int r, int k);

}  // namespace hampow
