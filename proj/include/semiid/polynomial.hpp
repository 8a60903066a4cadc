#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semiid/errors.hpp"
#include "semiid/numeric.hpp"
#include "semiid/semiring.hpp"
#include "semiid/word.hpp"

namespace semiid {

  // The variable x(s, i): letter s, vertex i >= 1.
  struct VariableId {
    Letter      letter = 'a';
    std::size_t vertex = 1;

    auto operator<=>(VariableId const&) const = default;

    std::string str() const {
      return std::string("x(") + letter + "," + std::to_string(vertex) + ")";
    }
  };

  // Exponents, all positive; the empty monomial is the constant 1.
  using Monomial = std::map<VariableId, std::uint64_t>;

  Monomial operator*(Monomial const& a, Monomial const& b);

  // Formal sum of monomials with positive natural coefficients, kept in
  // canonical form: equal monomials merged, zero coefficients dropped, terms
  // ordered by monomial. The universe lists the variables the polynomial is
  // considered a function of, which may exceed those that occur.
  class FormalPolynomial {
   public:
    FormalPolynomial() = default;
    explicit FormalPolynomial(std::set<VariableId> universe)
        : _universe(std::move(universe)) {}

    void add_term(Monomial const& m, BigInt const& coefficient);

    std::map<Monomial, BigInt> const& terms() const noexcept {
      return _terms;
    }
    std::set<VariableId> const& universe() const noexcept {
      return _universe;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }

    // Coefficients replaced by their normal form in the given monogenic type;
    // Cyclic(1, 1) is summation up to idempotency (coefficients capped at 1).
    FormalPolynomial reduced(Monogenic const& type) const;
    FormalPolynomial capped() const {
      return reduced(Monogenic::cyclic(1, 1));
    }

    // Renames vertices; vertices absent from the map are kept.
    FormalPolynomial relabeled(
        std::map<std::size_t, std::size_t> const& vertex_map) const;

    // Terms in canonical order joined by " + "; "0" for the zero polynomial.
    std::string str() const;

    // Syntactic identity of the canonical forms (universe ignored).
    bool operator==(FormalPolynomial const& other) const {
      return _terms == other._terms;
    }

   private:
    std::map<Monomial, BigInt> _terms;
    std::set<VariableId>       _universe;
  };

  // f_{u,rho}^w: the sum over embeddings alpha of u into w of
  //   prod_s prod_k x(s, rho_k)^{beta_s^w(alpha_k, alpha_{k+1})}.
  // rho must be a strictly increasing (|u| + 1)-tuple in [n], |u| <= n - 1.
  // The universe is alphabet x rho; the alphabet defaults to the letters of u
  // and w.
  FormalPolynomial build_f(Word const&                     u,
                           std::vector<std::size_t> const& rho,
                           Word const&                     w,
                           std::size_t                     n,
                           std::string const&              alphabet = "");

  // build_f with rho = (1, 2, ..., |u| + 1).
  FormalPolynomial build_f_canonical(Word const&        u,
                                     Word const&        w,
                                     std::string const& alphabet = "");

  template <Semiring S>
  using Assignment = std::map<VariableId, value_t<S>>;

  template <Semiring S>
  value_t<S> evaluate(FormalPolynomial const& p,
                      Assignment<S> const&    x,
                      S const&                s) {
    value_t<S> total = s.zero();
    for (auto const& [monomial, coefficient] : p.terms()) {
      value_t<S> term = nat_embed(s, coefficient);
      for (auto const& [var, exponent] : monomial) {
        auto it = x.find(var);
        if (it == x.end()) {
          throw PreconditionError("evaluate: no value bound to " + var.str());
        }
        term = s.mul(term, power(s, it->second, exponent));
      }
      total = s.add(total, term);
    }
    return total;
  }

  enum class EquivalenceStatus : std::uint8_t {
    equivalent,
    not_equivalent,
    not_falsified
  };

  enum class EquivalenceMethod : std::uint8_t { canonical, exhaustive, sampled };

  template <Semiring S>
  struct EquivalenceResult {
    EquivalenceStatus            status = EquivalenceStatus::equivalent;
    EquivalenceMethod            method = EquivalenceMethod::canonical;
    std::optional<Assignment<S>> witness;
    std::uint64_t                assignments_checked = 0;
  };

  struct EquivalenceOptions {
    std::uint64_t sample_budget    = 4096;
    std::uint64_t exhaustive_limit = std::uint64_t(1) << 20;
    std::uint64_t seed             = 0;
  };

  // Canonical identity (after reducing coefficients through the monogenic
  // type of S) proves equivalence over S. Otherwise finite carriers are
  // enumerated when small enough, and anything else is sampled. The witness
  // is the first falsifying assignment in enumeration (or sampling) order.
  template <Semiring S>
  EquivalenceResult<S> functionally_equivalent(FormalPolynomial const& p,
                                               FormalPolynomial const& q,
                                               S const&                s,
                                               EquivalenceOptions const& opts
                                               = {}) {
    if (p.universe() != q.universe()) {
      throw PreconditionError(
          "functionally_equivalent: variable universes differ");
    }
    EquivalenceResult<S> result;
    auto const           type = classify_monogenic(s);
    if (p.reduced(type) == q.reduced(type)) {
      return result;
    }
    std::vector<VariableId> const vars(p.universe().begin(),
                                       p.universe().end());
    auto const                    carrier = s.elements();

    auto differs = [&](Assignment<S> const& x) {
      return !(evaluate(p, x, s) == evaluate(q, x, s));
    };

    if (carrier) {
      // Total assignment count, saturating at the limit.
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < vars.size() && total <= opts.exhaustive_limit;
           ++i) {
        total *= carrier->size();
      }
      if (total <= opts.exhaustive_limit) {
        result.method = EquivalenceMethod::exhaustive;
        std::vector<std::size_t> digits(vars.size(), 0);
        Assignment<S>            x;
        for (auto const& v : vars) {
          x[v] = (*carrier)[0];
        }
        for (std::uint64_t t = 0; t < total; ++t) {
          ++result.assignments_checked;
          if (differs(x)) {
            result.status  = EquivalenceStatus::not_equivalent;
            result.witness = x;
            return result;
          }
          // Odometer with the last variable fastest.
          for (std::size_t i = vars.size(); i-- > 0;) {
            if (++digits[i] < carrier->size()) {
              x[vars[i]] = (*carrier)[digits[i]];
              break;
            }
            digits[i]  = 0;
            x[vars[i]] = (*carrier)[0];
          }
        }
        result.status = EquivalenceStatus::equivalent;
        return result;
      }
    }

    result.method = EquivalenceMethod::sampled;
    Rng rng(opts.seed);
    for (std::uint64_t t = 0; t < opts.sample_budget; ++t) {
      Assignment<S> x;
      for (auto const& v : vars) {
        x[v] = s.sample(rng);
      }
      ++result.assignments_checked;
      if (differs(x)) {
        result.status  = EquivalenceStatus::not_equivalent;
        result.witness = std::move(x);
        return result;
      }
    }
    result.status = EquivalenceStatus::not_falsified;
    return result;
  }

}  // namespace semiid
