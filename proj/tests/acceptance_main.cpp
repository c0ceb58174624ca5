// Runs every acceptance criterion and prints one line per criterion.
//
//   test_acceptance [paper|quick]

#include <iostream>
#include <string>

#include "luneknot/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace luneknot;
  const std::string suite = argc > 1 ? argv[1] : "paper";
  if (suite != "paper" && suite != "quick") {
    std::cerr << "usage: test_acceptance [paper|quick]\n";
    return 2;
  }
  const auto results = run_acceptance(suite == "paper" ? Suite::Full : Suite::Quick, EnumConfig::from_env(),
                                      [](const CriterionResult& r) { std::cout << format_result(r) << std::endl; });
  int failed = 0;
  for (const auto& r : results) failed += !r.passed;
  std::cout << results.size() - failed << '/' << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
