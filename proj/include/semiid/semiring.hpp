#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiid/errors.hpp"
#include "semiid/numeric.hpp"

namespace semiid {

  // Isomorphism type of the subsemiring generated by 1_S: either free (a copy
  // of N_0), or eventually periodic with the given index and period, so that
  // floor(j) = floor(k) iff j = k, or j, k >= index and j = k mod period.
  struct Monogenic {
    enum class Kind : std::uint8_t { free, cyclic };

    Kind          kind   = Kind::free;
    std::uint64_t index  = 0;
    std::uint64_t period = 1;

    static constexpr Monogenic free() noexcept {
      return {Kind::free, 0, 1};
    }
    static constexpr Monogenic cyclic(std::uint64_t index,
                                      std::uint64_t period) noexcept {
      return {Kind::cyclic, index, period};
    }

    bool is_free() const noexcept {
      return kind == Kind::free;
    }

    // Canonical representative of m under the congruence.
    BigInt reduce(BigInt const& m) const {
      if (is_free() || m < index) {
        return m;
      }
      return BigInt(index) + (m - index) % period;
    }

    bool same_image(BigInt const& j, BigInt const& k) const {
      return reduce(j) == reduce(k);
    }

    std::string to_string() const {
      return is_free() ? std::string("Free")
                       : "Cyclic(" + std::to_string(index) + ","
                             + std::to_string(period) + ")";
    }

    bool operator==(Monogenic const&) const = default;
  };

  template <typename S>
  concept Semiring = std::copy_constructible<S>
    && requires(S const&                        s,
                typename S::value_type const&   a,
                Rng&                            rng,
                std::string const&              text) {
         typename S::value_type;
         { s.name() } -> std::convertible_to<std::string>;
         { s.zero() } -> std::same_as<typename S::value_type>;
         { s.one() } -> std::same_as<typename S::value_type>;
         { s.add(a, a) } -> std::same_as<typename S::value_type>;
         { s.mul(a, a) } -> std::same_as<typename S::value_type>;
         { s.contains(a) } -> std::same_as<bool>;
         { s.is_idempotent() } -> std::same_as<bool>;
         { s.is_interval() } -> std::same_as<bool>;
         { s.has_free_rank1_element() } -> std::same_as<bool>;
         { s.has_distinct_partial_sums_element() } -> std::same_as<bool>;
         { s.elements() }
           -> std::same_as<std::optional<std::vector<typename S::value_type>>>;
         { s.sample(rng) } -> std::same_as<typename S::value_type>;
         { s.declared_monogenic() } -> std::same_as<std::optional<Monogenic>>;
         { s.default_scalars() }
           -> std::same_as<std::vector<typename S::value_type>>;
         { s.format(a) } -> std::same_as<std::string>;
         { s.parse(text) } -> std::same_as<typename S::value_type>;
       };

  template <Semiring S>
  using value_t = typename S::value_type;

  template <Semiring S>
  void require_member(S const& s, value_t<S> const& a) {
    if (!s.contains(a)) {
      throw InstanceMismatch("value " + s.format(a)
                             + " does not belong to semiring " + s.name());
    }
  }

  template <Semiring S>
  value_t<S> add(S const& s, value_t<S> const& a, value_t<S> const& b) {
    require_member(s, a);
    require_member(s, b);
    return s.add(a, b);
  }

  template <Semiring S>
  value_t<S> mul(S const& s, value_t<S> const& a, value_t<S> const& b) {
    require_member(s, a);
    require_member(s, b);
    return s.mul(a, b);
  }

  template <Semiring S>
  void require_idempotent(S const& s) {
    if (!s.is_idempotent()) {
      throw UnsupportedStructure("semiring " + s.name()
                                 + " is not idempotent");
    }
  }

  template <Semiring S>
  void require_interval(S const& s) {
    if (!s.is_interval()) {
      throw UnsupportedStructure("semiring " + s.name()
                                 + " is not an interval semiring");
    }
  }

  // a <= b iff a + b = b.
  template <Semiring S>
  bool natural_leq(S const& s, value_t<S> const& a, value_t<S> const& b) {
    require_idempotent(s);
    return add(s, a, b) == b;
  }

  // The m-fold sum of 1_S, by doubling.
  template <Semiring S>
  value_t<S> nat_embed(S const& s, BigInt const& m) {
    if (m < 0) {
      throw PreconditionError("nat_embed: negative multiplicity");
    }
    value_t<S> acc = s.zero();
    if (m == 0) {
      return acc;
    }
    for (auto bit = static_cast<std::ptrdiff_t>(boost::multiprecision::msb(m));
         bit >= 0;
         --bit) {
      acc = s.add(acc, acc);
      if (boost::multiprecision::bit_test(m, static_cast<unsigned>(bit))) {
        acc = s.add(acc, s.one());
      }
    }
    return acc;
  }

  template <Semiring S>
  value_t<S> nat_embed(S const& s, std::uint64_t m) {
    return nat_embed(s, BigInt(m));
  }

  template <Semiring S>
  value_t<S> power(S const& s, value_t<S> base, std::uint64_t e) {
    value_t<S> acc = s.one();
    while (e != 0) {
      if (e & 1u) {
        acc = s.mul(acc, base);
      }
      e >>= 1u;
      if (e != 0) {
        base = s.mul(base, base);
      }
    }
    return acc;
  }

  namespace detail {
    template <Semiring S>
    std::vector<value_t<S>> partial_sums(S const& s, std::size_t count) {
      std::vector<value_t<S>> out;
      out.reserve(count);
      value_t<S> acc = s.zero();
      for (std::size_t k = 0; k < count; ++k) {
        out.push_back(acc);
        acc = s.add(acc, s.one());
      }
      return out;
    }
  }  // namespace detail

  // Finite carriers: iterate floor(0), floor(1), ... until the first repeat.
  // Infinite carriers: confirm the declared classification on a prefix.
  template <Semiring S>
  Monogenic classify_monogenic(S const& s) {
    auto const declared = s.declared_monogenic();
    auto const carrier  = s.elements();
    if (carrier) {
      std::vector<value_t<S>> seen;
      value_t<S>              acc = s.zero();
      for (std::uint64_t k = 0;; ++k) {
        for (std::uint64_t j = 0; j < seen.size(); ++j) {
          if (seen[j] == acc) {
            auto const computed = Monogenic::cyclic(j, k - j);
            if (declared && *declared != computed) {
              throw InconsistencyError(
                  "declared " + declared->to_string() + " but computed "
                  + computed.to_string() + " for " + s.name());
            }
            return computed;
          }
        }
        seen.push_back(acc);
        acc = s.add(acc, s.one());
      }
    }
    if (!declared) {
      throw PreconditionError("semiring " + s.name()
                              + " is infinite and declares no monogenic type");
    }
    if (declared->is_free()) {
      auto const sums = detail::partial_sums(s, 64);
      for (std::size_t j = 0; j < sums.size(); ++j) {
        for (std::size_t k = j + 1; k < sums.size(); ++k) {
          if (sums[j] == sums[k]) {
            throw InconsistencyError("semiring " + s.name()
                                     + " declared Free but floor("
                                     + std::to_string(j) + ") = floor("
                                     + std::to_string(k) + ")");
          }
        }
      }
      return *declared;
    }
    auto const i    = declared->index;
    auto const p    = declared->period;
    auto const sums = detail::partial_sums(s, i + p + 1);
    for (std::size_t j = 0; j < i + p; ++j) {
      for (std::size_t k = j + 1; k < i + p; ++k) {
        if (sums[j] == sums[k]) {
          throw InconsistencyError("semiring " + s.name() + " declared "
                                   + declared->to_string()
                                   + " but collides earlier");
        }
      }
    }
    if (!(sums[i + p] == sums[i])) {
      throw InconsistencyError("semiring " + s.name() + " declared "
                               + declared->to_string()
                               + " but the collision is absent");
    }
    return *declared;
  }

}  // namespace semiid
