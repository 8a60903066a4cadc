#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semiid {

  enum exit_code : int {
    exit_ok           = 0,
    exit_fails        = 1,
    exit_usage        = 2,
    exit_inconsistent = 3
  };

  // Entry point of the semiid tool. args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);
  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semiid
