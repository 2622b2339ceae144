#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hampow {

struct VerifyOptions {
  int workers = 1;
  std::uint64_t seed = 20240817;
  long search_instances_tight = 200;   // random instances at (n,r,k) = (10,3,1)
  long search_instances_square = 100;  // random instances at (n,r,k) = (9,3,2)
  long estimates_n_max = 1000;
  int qn_max = 9;
  double search_timeout_seconds = 30.0;
};

struct VerifyFailure {
  std::string invariant;
  std::string instance;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string suite;
  long checks_run = 0;
  std::vector<VerifyFailure> failures;

  bool ok() const { return failures.empty(); }
};

// suite: facts | bounds | moments | search | all
VerifyReport run_verify(const std::string& suite, const VerifyOptions& opts = {});

}  // namespace hampow
