// One line per acceptance criterion; non-zero exit if any fails.

#include <iostream>

#include "equidec/acceptance.hpp"

int main() {
  const auto results = equidec::run_acceptance();
  equidec::print_acceptance_table(std::cout, results);
  for (const auto& r : results)
    if (!r.passed) return 1;
  return 0;
}
