#include <cstdlib>
#include <iostream>
#include <string>

#include "reeb/acceptance.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 20240611ULL;
  int failures = 0;
  for (const auto& result : reeb::run_acceptance(seed)) {
    std::cout << reeb::format_line(result) << std::endl;
    if (!result.passed) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
