// Acceptance runner: one PASS/FAIL line per criterion, sub-lines indented.
//   acceptance             all criteria
//   acceptance 3 7         selected criteria

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "semiid/verify/criteria.hpp"

int main(int argc, char** argv) {
  using namespace semiid::verify;
  std::vector<int> numbers;
  for (int k = 1; k < argc; ++k) {
    numbers.push_back(std::atoi(argv[k]));
  }
  if (numbers.empty()) {
    for (int k = 1; k <= criterion_count; ++k) {
      numbers.push_back(k);
    }
  }
  int failed = 0;
  for (int k : numbers) {
    try {
      auto const r = run_criterion(k);
      std::cout << format_result(r) << std::flush;
      failed += r.passed() ? 0 : 1;
    } catch (std::exception const& e) {
      std::cout << "FAIL [" << k << "] raised: " << e.what() << "\n";
      ++failed;
    }
  }
  std::cout << numbers.size() - failed << " of " << numbers.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
