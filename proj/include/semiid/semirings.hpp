#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiid/numeric.hpp"
#include "semiid/semiring.hpp"

// The concrete commutative semirings. Every instance is an immutable value;
// values of the infinite instances are drawn by sample() from a fixed
// countable subset (small-denominator rationals).

namespace semiid {

  class Boolean {
   public:
    using value_type = bool;

    std::string name() const {
      return "bool";
    }
    bool zero() const noexcept {
      return false;
    }
    bool one() const noexcept {
      return true;
    }
    bool add(bool a, bool b) const noexcept {
      return a || b;
    }
    bool mul(bool a, bool b) const noexcept {
      return a && b;
    }
    bool contains(bool) const noexcept {
      return true;
    }
    bool is_idempotent() const noexcept {
      return true;
    }
    bool is_interval() const noexcept {
      return true;
    }
    bool has_free_rank1_element() const noexcept {
      return false;
    }
    bool has_distinct_partial_sums_element() const noexcept {
      return false;
    }
    std::optional<std::vector<bool>> elements() const {
      return std::vector<bool>{false, true};
    }
    bool sample(Rng& rng) const {
      return draw_below(rng, 2) == 1;
    }
    std::optional<Monogenic> declared_monogenic() const {
      return std::nullopt;
    }
    std::vector<bool> default_scalars() const {
      return {true};
    }
    std::string format(bool a) const {
      return a ? "1" : "0";
    }
    bool parse(std::string const& text) const;
  };

  // (N_0, +, *).
  class Naturals {
   public:
    using value_type = Natural;

    std::string name() const {
      return "nat";
    }
    Natural zero() const {
      return {0};
    }
    Natural one() const {
      return {1};
    }
    Natural add(Natural const& a, Natural const& b) const {
      return {a.value + b.value};
    }
    Natural mul(Natural const& a, Natural const& b) const {
      return {a.value * b.value};
    }
    bool contains(Natural const& a) const {
      return a.value >= 0;
    }
    bool is_idempotent() const noexcept {
      return false;
    }
    bool is_interval() const noexcept {
      return false;
    }
    bool has_free_rank1_element() const noexcept {
      return true;
    }
    bool has_distinct_partial_sums_element() const noexcept {
      return true;
    }
    std::optional<std::vector<Natural>> elements() const {
      return std::nullopt;
    }
    Natural sample(Rng& rng) const {
      return {BigInt(draw_below(rng, 16))};
    }
    std::optional<Monogenic> declared_monogenic() const {
      return Monogenic::free();
    }
    std::vector<Natural> default_scalars() const {
      return {};
    }
    std::string format(Natural const& a) const {
      return a.value.str();
    }
    Natural parse(std::string const& text) const;
  };

  // N_0 modulo m ~ m' iff m = m' or (m, m' >= index and m = m' mod period);
  // realises the monogenic type Cyclic(index, period).
  class TruncatedNaturals {
   public:
    using value_type = Residue;

    TruncatedNaturals(std::uint64_t index, std::uint64_t period);

    std::uint64_t index() const noexcept {
      return _index;
    }
    std::uint64_t period() const noexcept {
      return _period;
    }
    std::uint64_t size() const noexcept {
      return _index + _period;
    }

    std::uint64_t normalize(std::uint64_t m) const noexcept {
      return m < _index ? m : _index + (m - _index) % _period;
    }

    std::string name() const {
      return "nat:" + std::to_string(_index) + "," + std::to_string(_period);
    }
    Residue zero() const noexcept {
      return {normalize(0)};
    }
    Residue one() const noexcept {
      return {normalize(1)};
    }
    Residue add(Residue a, Residue b) const noexcept {
      return {normalize(a.value + b.value)};
    }
    Residue mul(Residue a, Residue b) const noexcept {
      return {normalize(a.value * b.value)};
    }
    bool contains(Residue a) const noexcept {
      return a.value < size();
    }
    bool is_idempotent() const noexcept {
      return _idempotent;
    }
    bool is_interval() const noexcept {
      return _interval;
    }
    bool has_free_rank1_element() const noexcept {
      return false;
    }
    bool has_distinct_partial_sums_element() const noexcept {
      return false;
    }
    std::optional<std::vector<Residue>> elements() const;
    Residue sample(Rng& rng) const {
      return {draw_below(rng, size())};
    }
    std::optional<Monogenic> declared_monogenic() const {
      return Monogenic::cyclic(_index, _period);
    }
    std::vector<Residue> default_scalars() const;
    std::string format(Residue a) const {
      return std::to_string(a.value);
    }
    Residue parse(std::string const& text) const;

   private:
    std::uint64_t _index;
    std::uint64_t _period;
    bool          _idempotent;
    bool          _interval;
  };

  // (Q u {-inf}, max, +).
  class MaxPlus {
   public:
    using value_type = ExtendedRational;

    std::string name() const {
      return "maxplus";
    }
    ExtendedRational zero() const {
      return ExtendedRational::negative_infinity();
    }
    ExtendedRational one() const {
      return ExtendedRational::finite(0);
    }
    ExtendedRational add(ExtendedRational const& a,
                         ExtendedRational const& b) const {
      return a < b ? b : a;
    }
    ExtendedRational mul(ExtendedRational const& a,
                         ExtendedRational const& b) const {
      if (!a.is_finite() || !b.is_finite()) {
        return zero();
      }
      return ExtendedRational::finite(a.value + b.value);
    }
    bool contains(ExtendedRational const& a) const noexcept {
      return a.kind != ExtendedRational::Kind::positive_infinity;
    }
    bool is_idempotent() const noexcept {
      return true;
    }
    bool is_interval() const noexcept {
      return false;
    }
    bool has_free_rank1_element() const noexcept {
      return true;
    }
    // alpha = 1 has partial sums max(1, ..., j) = j.
    bool has_distinct_partial_sums_element() const noexcept {
      return true;
    }
    std::optional<std::vector<ExtendedRational>> elements() const {
      return std::nullopt;
    }
    ExtendedRational sample(Rng& rng) const;
    std::optional<Monogenic> declared_monogenic() const {
      return Monogenic::cyclic(1, 1);
    }
    std::vector<ExtendedRational> default_scalars() const {
      return {};
    }
    std::string format(ExtendedRational const& a) const;
    ExtendedRational parse(std::string const& text) const;
  };

  // ([0, inf] n (Q u {inf}), min, +); zero is +inf and one is 0.
  class MinPlusInterval {
   public:
    using value_type = ExtendedRational;

    std::string name() const {
      return "minplus01inf";
    }
    ExtendedRational zero() const {
      return ExtendedRational::positive_infinity();
    }
    ExtendedRational one() const {
      return ExtendedRational::finite(0);
    }
    ExtendedRational add(ExtendedRational const& a,
                         ExtendedRational const& b) const {
      return b < a ? b : a;
    }
    ExtendedRational mul(ExtendedRational const& a,
                         ExtendedRational const& b) const {
      if (!a.is_finite() || !b.is_finite()) {
        return zero();
      }
      return ExtendedRational::finite(a.value + b.value);
    }
    bool contains(ExtendedRational const& a) const {
      return a.kind == ExtendedRational::Kind::positive_infinity
             || (a.is_finite() && a.value >= 0);
    }
    bool is_idempotent() const noexcept {
      return true;
    }
    bool is_interval() const noexcept {
      return true;
    }
    bool has_free_rank1_element() const noexcept {
      return true;
    }
    bool has_distinct_partial_sums_element() const noexcept {
      return false;
    }
    std::optional<std::vector<ExtendedRational>> elements() const {
      return std::nullopt;
    }
    ExtendedRational sample(Rng& rng) const;
    std::optional<Monogenic> declared_monogenic() const {
      return Monogenic::cyclic(1, 1);
    }
    std::vector<ExtendedRational> default_scalars() const {
      return {one(),
              ExtendedRational::finite(1),
              ExtendedRational::finite(16)};
    }
    std::string format(ExtendedRational const& a) const;
    ExtendedRational parse(std::string const& text) const;
  };

  // ([0, 1] n Q, max, *).
  class UnitInterval {
   public:
    using value_type = ExtendedRational;

    std::string name() const {
      return "interval01";
    }
    ExtendedRational zero() const {
      return ExtendedRational::finite(0);
    }
    ExtendedRational one() const {
      return ExtendedRational::finite(1);
    }
    ExtendedRational add(ExtendedRational const& a,
                         ExtendedRational const& b) const {
      return a < b ? b : a;
    }
    ExtendedRational mul(ExtendedRational const& a,
                         ExtendedRational const& b) const {
      return ExtendedRational::finite(a.value * b.value);
    }
    bool contains(ExtendedRational const& a) const {
      return a.is_finite() && a.value >= 0 && a.value <= 1;
    }
    bool is_idempotent() const noexcept {
      return true;
    }
    bool is_interval() const noexcept {
      return true;
    }
    bool has_free_rank1_element() const noexcept {
      return true;
    }
    bool has_distinct_partial_sums_element() const noexcept {
      return false;
    }
    std::optional<std::vector<ExtendedRational>> elements() const {
      return std::nullopt;
    }
    ExtendedRational sample(Rng& rng) const;
    std::optional<Monogenic> declared_monogenic() const {
      return Monogenic::cyclic(1, 1);
    }
    std::vector<ExtendedRational> default_scalars() const {
      return {one(),
              ExtendedRational::finite(BigRational(1, 2)),
              ExtendedRational::finite(BigRational(1, 16))};
    }
    std::string format(ExtendedRational const& a) const;
    ExtendedRational parse(std::string const& text) const;
  };

  // The four element lattice 0 < a, b < 1 with a, b incomparable; join is
  // addition and meet is multiplication.
  class DiamondLattice {
   public:
    using value_type = LatticeElement;

    std::string name() const {
      return "lattice:diamond";
    }
    LatticeElement zero() const noexcept {
      return {0b00};
    }
    LatticeElement one() const noexcept {
      return {0b11};
    }
    LatticeElement add(LatticeElement a, LatticeElement b) const noexcept {
      return {static_cast<std::uint8_t>(a.bits | b.bits)};
    }
    LatticeElement mul(LatticeElement a, LatticeElement b) const noexcept {
      return {static_cast<std::uint8_t>(a.bits & b.bits)};
    }
    bool contains(LatticeElement a) const noexcept {
      return a.bits < 4;
    }
    bool is_idempotent() const noexcept {
      return true;
    }
    bool is_interval() const noexcept {
      return true;
    }
    bool has_free_rank1_element() const noexcept {
      return false;
    }
    bool has_distinct_partial_sums_element() const noexcept {
      return false;
    }
    std::optional<std::vector<LatticeElement>> elements() const {
      return std::vector<LatticeElement>{{0b00}, {0b01}, {0b10}, {0b11}};
    }
    LatticeElement sample(Rng& rng) const {
      return {static_cast<std::uint8_t>(draw_below(rng, 4))};
    }
    std::optional<Monogenic> declared_monogenic() const {
      return std::nullopt;
    }
    std::vector<LatticeElement> default_scalars() const {
      return {{0b11}, {0b01}, {0b10}};
    }
    std::string format(LatticeElement a) const;
    LatticeElement parse(std::string const& text) const;
  };

  static_assert(Semiring<Boolean>);
  static_assert(Semiring<Naturals>);
  static_assert(Semiring<TruncatedNaturals>);
  static_assert(Semiring<MaxPlus>);
  static_assert(Semiring<MinPlusInterval>);
  static_assert(Semiring<UnitInterval>);
  static_assert(Semiring<DiamondLattice>);

}  // namespace semiid
