// Runs every acceptance criterion and prints one line per criterion.
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "whitefact/selftest.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  if (argc > 1) seed = std::stoull(argv[1]);
  bool all = true;
  for (int id = 1; id <= whitefact::kCriterionCount; ++id) {
    const auto r = whitefact::run_criterion(id, seed);
    std::cout << whitefact::format_result(r) << std::endl;
    all = all && r.passed();
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
