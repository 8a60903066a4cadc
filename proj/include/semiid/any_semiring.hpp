#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "semiid/semirings.hpp"

namespace semiid {

  // Runtime choice among the shipped instances; dispatch with std::visit.
  using AnySemiring = std::variant<Boolean,
                                   Naturals,
                                   TruncatedNaturals,
                                   MaxPlus,
                                   MinPlusInterval,
                                   UnitInterval,
                                   DiamondLattice>;

  // Accepts bool, nat, nat:<index>,<period>, maxplus, minplus01inf,
  // interval01, lattice:diamond.
  AnySemiring parse_semiring(std::string_view spec);

  inline std::string name(AnySemiring const& s) {
    return std::visit([](auto const& x) { return x.name(); }, s);
  }

}  // namespace semiid
