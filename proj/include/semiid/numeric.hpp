#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace semiid {

  using BigInt      = boost::multiprecision::cpp_int;
  using BigRational = boost::multiprecision::cpp_rational;
  using Rng         = std::mt19937_64;

  // Uniform draw from [0, bound). Rejection sampling on the raw engine output
  // keeps streams identical across standard library implementations.
  inline std::uint64_t draw_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) {
      return 0;
    }
    std::uint64_t const limit = Rng::max() - (Rng::max() % bound);
    std::uint64_t       x;
    do {
      x = rng();
    } while (x >= limit);
    return x % bound;
  }

  std::string to_string(BigRational const& q);
  BigRational parse_rational(std::string const& text);

  // Element of N_0 with arbitrary precision.
  struct Natural {
    BigInt value;

    bool operator==(Natural const&) const = default;
    friend std::strong_ordering operator<=>(Natural const& a,
                                            Natural const& b) {
      return a.value < b.value   ? std::strong_ordering::less
             : a.value > b.value ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
    }
  };

  // Element of a finite quotient N(index, period) of N_0, stored in normal form.
  struct Residue {
    std::uint64_t value = 0;

    auto operator<=>(Residue const&) const = default;
  };

  // Rational number optionally extended by one of the formal infinities.
  struct ExtendedRational {
    enum class Kind : std::uint8_t {
      negative_infinity,
      finite,
      positive_infinity
    };

    Kind        kind = Kind::finite;
    BigRational value{0};

    static ExtendedRational finite(BigRational q) {
      return {Kind::finite, std::move(q)};
    }
    static ExtendedRational positive_infinity() {
      return {Kind::positive_infinity, BigRational(0)};
    }
    static ExtendedRational negative_infinity() {
      return {Kind::negative_infinity, BigRational(0)};
    }

    bool is_finite() const noexcept {
      return kind == Kind::finite;
    }

    bool operator==(ExtendedRational const&) const = default;
    friend std::strong_ordering operator<=>(ExtendedRational const& a,
                                            ExtendedRational const& b) {
      if (a.kind != b.kind) {
        return a.kind <=> b.kind;
      }
      if (a.kind != Kind::finite || a.value == b.value) {
        return std::strong_ordering::equal;
      }
      return a.value < b.value ? std::strong_ordering::less
                               : std::strong_ordering::greater;
    }
  };

  // Element of a finite lattice encoded as a bit set; join is |, meet is &.
  struct LatticeElement {
    std::uint8_t bits = 0;

    auto operator<=>(LatticeElement const&) const = default;
  };

}  // namespace semiid
