#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quadra/params.hpp"

namespace quadra {

struct SuiteCase {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct SuiteReport {
  explicit SuiteReport(std::string name = {}) : suite(std::move(name)) {}
  std::string suite;
  bool pass = true;
  std::vector<SuiteCase> cases;
  void add(std::string name, bool ok, std::string detail = {});
};

const std::vector<std::string>& suite_names();

// Deterministic given the seed. params only matters for "trace" (its
// evaluation point); the randomized suites draw their own parameters.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, const DeformationParams& params);

}  // namespace quadra
