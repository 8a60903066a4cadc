#include "semiid/report.hpp"

namespace semiid {

  MonoidKind parse_monoid_kind(std::string const& text) {
    if (text == "ut") {
      return MonoidKind::upper_triangular;
    } else if (text == "u") {
      return MonoidKind::unitriangular;
    } else if (text == "r") {
      return MonoidKind::reflexive;
    }
    throw ParseError("unknown monoid '" + text + "', expected ut, u or r");
  }

  std::string to_string(MonoidKind k) {
    switch (k) {
      case MonoidKind::upper_triangular:
        return "ut";
      case MonoidKind::unitriangular:
        return "u";
      case MonoidKind::reflexive:
        return "r";
    }
    return "?";
  }

  nlohmann::json to_json(Evidence const& e) {
    return {{"u", e.u.str()},
            {"status", e.status},
            {"method", e.method},
            {"lhs", e.lhs},
            {"rhs", e.rhs}};
  }

}  // namespace semiid
