#include <cstdlib>
#include <iostream>
#include <string>

#include "wreath/acceptance.hpp"

int main(int argc, char** argv) {
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  const auto results = wreath::run_acceptance(std::cout, only);
  int passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
  return wreath::all_passed(results) ? EXIT_SUCCESS : EXIT_FAILURE;
}
