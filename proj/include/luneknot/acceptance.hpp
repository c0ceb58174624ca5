#pragma once

#include <functional>
#include <string>
#include <vector>

#include "luneknot/enumerate.hpp"

namespace luneknot {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Full runs every check at full size; Quick shrinks enumeration bounds so
/// the suite finishes in seconds.
enum class Suite { Full, Quick };

/// Runs the thirteen checks in order. on_result is called as each finishes.
std::vector<CriterionResult> run_acceptance(Suite suite, const EnumConfig& config,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS [ 1] name (0.12 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace luneknot
