#pragma once

#include "ybfk/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ybfk {

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::size_t threads = 0; // 0: thread_budget()
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  Json details;
};

/// Ids 1 … criterion_count(), in order.
int criterion_count();
std::string criterion_name(int id);

/// Runs one criterion. Tolerances and sample counts are fixed in the implementation
/// and echoed in `details`. Throws std::out_of_range for an unknown id.
CriterionResult run_criterion(int id, const SuiteConfig& config);
std::vector<CriterionResult> run_suite(const SuiteConfig& config);

Json to_json(const CriterionResult& result);

} // namespace ybfk
