#include "semiid/any_semiring.hpp"

#include <charconv>

namespace semiid {

  namespace {
    std::uint64_t parse_count(std::string_view text, std::string_view spec) {
      std::uint64_t value = 0;
      auto const [ptr, ec]
          = std::from_chars(text.data(), text.data() + text.size(), value);
      if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("unknown semiring spec '" + std::string(spec) + "'");
      }
      return value;
    }
  }  // namespace

  AnySemiring parse_semiring(std::string_view spec) {
    if (spec == "bool") {
      return Boolean{};
    }
    if (spec == "nat") {
      return Naturals{};
    }
    if (spec == "maxplus") {
      return MaxPlus{};
    }
    if (spec == "minplus01inf") {
      return MinPlusInterval{};
    }
    if (spec == "interval01") {
      return UnitInterval{};
    }
    if (spec == "lattice:diamond") {
      return DiamondLattice{};
    }
    if (spec.starts_with("nat:")) {
      auto const body  = spec.substr(4);
      auto const comma = body.find(',');
      if (comma == std::string_view::npos) {
        throw ParseError("unknown semiring spec '" + std::string(spec) + "'");
      }
      auto const index  = parse_count(body.substr(0, comma), spec);
      auto const period = parse_count(body.substr(comma + 1), spec);
      if (period == 0) {
        throw ParseError("semiring spec '" + std::string(spec)
                         + "' needs period >= 1");
      }
      return TruncatedNaturals(index, period);
    }
    throw ParseError("unknown semiring spec '" + std::string(spec) + "'");
  }

}  // namespace semiid
