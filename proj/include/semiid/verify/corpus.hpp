#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "semiid/word.hpp"

namespace semiid::corpus {

  inline constexpr std::uint64_t random_seed = 20240;

  // Unordered pairs w < v (shortlex) of distinct non-empty words over {x, y}
  // of length <= max_len; balanced ones only, or all of them.
  std::vector<Identity> balanced_xy(std::size_t max_len = 5);
  std::vector<Identity> all_pairs_xy(std::size_t max_len = 5);

  // Sides of length 1..max_len drawn uniformly over the letters.
  std::vector<Identity> random_identities(std::size_t      count   = 200,
                                          std::uint64_t    seed    = random_seed,
                                          std::string_view letters = "xyz",
                                          std::size_t      max_len = 8);

  // balanced_xy() followed by random_identities().
  std::vector<Identity> standard();

}  // namespace semiid::corpus
