#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace semiid::verify {

  struct CriterionLine {
    std::string label;
    bool        passed = true;
    std::string detail;
  };

  struct CriterionResult {
    int                        number = 0;
    std::string                title;
    std::vector<CriterionLine> lines;
    double                     seconds = 0;

    bool passed() const {
      for (auto const& l : lines) {
        if (!l.passed) {
          return false;
        }
      }
      return !lines.empty();
    }
  };

  struct VerifyOptions {
    std::uint64_t seed = 0;
  };

  inline constexpr int criterion_count = 12;

  // Acceptance criteria 1..12.
  CriterionResult run_criterion(int number, VerifyOptions const& opts = {});

  // Law checks for every shipped semiring and word-level oracle checks; not
  // numbered criteria but run by the matching verify suites.
  CriterionResult semiring_axioms(VerifyOptions const& opts = {});
  CriterionResult word_oracles(VerifyOptions const& opts = {});

  std::vector<std::string> suite_names();

  // Throws PreconditionError for an unknown suite.
  std::vector<CriterionResult> run_suite(std::string_view     suite,
                                         VerifyOptions const& opts = {});

  // "PASS [n] title (1.23 s)" followed by indented sub-lines.
  std::string format_result(CriterionResult const& r);

}  // namespace semiid::verify
