#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semiid/errors.hpp"
#include "semiid/matrix.hpp"
#include "semiid/polynomial.hpp"
#include "semiid/semiring.hpp"
#include "semiid/semirings.hpp"
#include "semiid/word.hpp"

namespace semiid {

  enum class Outcome : std::uint8_t { holds, fails, undetermined };

  inline std::string to_string(Outcome o) {
    switch (o) {
      case Outcome::holds:
        return "holds";
      case Outcome::fails:
        return "fails";
      case Outcome::undetermined:
        return "undetermined";
    }
    return "?";
  }

  // What was compared for one word u.
  struct Evidence {
    Word        u;
    std::string status;
    std::string method;
    std::string lhs;
    std::string rhs;
  };

  // A morphism whose images of the two sides differ at (row, col), 1-based.
  template <Semiring S>
  struct Witness {
    Morphism<S> morphism;
    std::size_t row = 1;
    std::size_t col = 1;
    Matrix<S>   lhs_image;
    Matrix<S>   rhs_image;
  };

  template <Semiring S>
  struct Verdict {
    Outcome                   outcome = Outcome::holds;
    std::string               criterion;
    std::vector<Evidence>     evidence;
    std::optional<Witness<S>> witness;
    std::vector<Word>         inconclusive;
    std::uint64_t             spot_checks = 0;

    bool holds() const noexcept {
      return outcome == Outcome::holds;
    }
    bool fails() const noexcept {
      return outcome == Outcome::fails;
    }
  };

  struct CheckOptions {
    std::uint64_t seed             = 0;
    std::uint64_t sample_budget    = 4096;
    std::uint64_t exhaustive_limit = std::uint64_t(1) << 20;
    std::size_t   max_alphabet     = 8;
    std::uint64_t rn_spot_checks   = 1000;
  };

  namespace detail {
    inline std::string checked_alphabet(Identity const&     id,
                                        CheckOptions const& opts) {
      auto sigma = alphabet(id);
      if (sigma.size() > opts.max_alphabet) {
        throw PreconditionError("identity uses " + std::to_string(sigma.size())
                                + " letters; the bound is "
                                + std::to_string(opts.max_alphabet));
      }
      return sigma;
    }

    inline void require_dimension(std::size_t n, std::size_t least) {
      if (n < least || n > max_dimension) {
        throw PreconditionError("n must lie in [" + std::to_string(least) + ", "
                                + std::to_string(max_dimension) + "], got "
                                + std::to_string(n));
      }
    }

    // phi(s) has diag(s, k) at (k, k) and 1_S at (k, k + 1) when u_k = s.
    template <Semiring S, typename Diagonal>
    Morphism<S> path_morphism(S const&           s,
                              std::string const& sigma,
                              std::size_t        n,
                              Word const&        u,
                              Diagonal const&    diag) {
      Morphism<S> phi;
      for (Letter c : sigma) {
        Matrix<S> A = zeros(s, n);
        for (std::size_t k = 1; k <= n; ++k) {
          A(k - 1, k - 1) = diag(c, k);
        }
        for (std::size_t k = 1; k <= u.size(); ++k) {
          if (u[k - 1] == c) {
            A(k - 1, k) = s.one();
          }
        }
        phi.images.emplace(c, std::move(A));
      }
      return phi;
    }

    // Multiplies out both sides; a witness that fails to separate them at
    // its recorded entry contradicts the criterion that produced it.
    template <Semiring S>
    Witness<S> confirmed_witness(S const&        s,
                                 Identity const& id,
                                 Morphism<S>     phi,
                                 std::size_t     row,
                                 std::size_t     col) {
      Witness<S> w{std::move(phi), row, col, {}, {}};
      w.lhs_image = evaluate(s, w.morphism, id.lhs);
      w.rhs_image = evaluate(s, w.morphism, id.rhs);
      if (w.lhs_image(row - 1, col - 1) == w.rhs_image(row - 1, col - 1)) {
        throw InconsistencyError("witness for " + id.str()
                                 + " does not separate the sides at ("
                                 + std::to_string(row) + ","
                                 + std::to_string(col) + ")");
      }
      return w;
    }

    template <Semiring S>
    Witness<S> unit_path_witness(S const&           s,
                                 Identity const&    id,
                                 std::string const& sigma,
                                 std::size_t        n,
                                 Word const&        u) {
      auto phi = path_morphism(s, sigma, n, u, [&](Letter, std::size_t) {
        return s.one();
      });
      return confirmed_witness(s, id, std::move(phi), 1, u.size() + 1);
    }

    inline std::string to_decimal(BigInt const& m) {
      return m.str();
    }
  }  // namespace detail

  // True when S has an element generating a free rank-1 multiplicative
  // submonoid; identities of UT_n(S), n >= 2, are then balanced.
  template <Semiring S>
  bool requires_balanced(S const& s) {
    return s.has_free_rank1_element();
  }

  template <Semiring S>
  bool balanced_guard_consistent(Identity const&   id,
                                 std::size_t       n,
                                 S const&          s,
                                 Verdict<S> const& v) {
    return !(requires_balanced(s) && n >= 2 && v.holds() && !is_balanced(id));
  }

  template <Semiring S>
  void assert_balanced_guard(Identity const&   id,
                             std::size_t       n,
                             S const&          s,
                             Verdict<S> const& v) {
    if (!balanced_guard_consistent(id, n, s, v)) {
      throw InconsistencyError("unbalanced identity " + id.str()
                               + " reported to hold over " + s.name());
    }
  }

  // w = v holds in UT_n(S) iff f_u^w and f_u^v are functionally equivalent
  // for every u with |u| <= n - 1.
  template <Semiring S>
  Verdict<S> check_UT(Identity const&     id,
                      std::size_t         n,
                      S const&            s,
                      CheckOptions const& opts = {}) {
    detail::require_dimension(n, 1);
    auto const sigma = detail::checked_alphabet(id, opts);
    Verdict<S> verdict;
    verdict.criterion = "upper-triangular polynomial equivalence";

    bool const skip_empty = n >= 2 && s.has_free_rank1_element()
                            && s.has_distinct_partial_sums_element();
    EquivalenceOptions eq;
    eq.sample_budget    = opts.sample_budget;
    eq.exhaustive_limit = opts.exhaustive_limit;
    eq.seed             = opts.seed;

    for (auto const& u : words_up_to(sigma, n - 1)) {
      auto const p = build_f_canonical(u, id.lhs, sigma);
      auto const q = build_f_canonical(u, id.rhs, sigma);
      Evidence   e{u, "", "", p.str(), q.str()};
      if (u.empty() && skip_empty) {
        e.status = "skipped";
        e.method = "implied by the one-letter checks";
        verdict.evidence.push_back(std::move(e));
        continue;
      }
      auto const r = functionally_equivalent(p, q, s, eq);
      switch (r.method) {
        case EquivalenceMethod::canonical:
          e.method = "canonical";
          break;
        case EquivalenceMethod::exhaustive:
          e.method = "exhaustive";
          break;
        case EquivalenceMethod::sampled:
          e.method = "sampled";
          break;
      }
      if (r.status == EquivalenceStatus::equivalent) {
        e.status = "equivalent";
        verdict.evidence.push_back(std::move(e));
      } else if (r.status == EquivalenceStatus::not_falsified) {
        e.status = "not_falsified";
        verdict.evidence.push_back(std::move(e));
        verdict.inconclusive.push_back(u);
      } else {
        e.status = "not_equivalent";
        verdict.evidence.push_back(std::move(e));
        auto const& x   = *r.witness;
        auto        phi = detail::path_morphism(
            s, sigma, n, u, [&](Letter c, std::size_t k) {
              auto it = x.find(VariableId{c, k});
              return it == x.end() ? s.one() : it->second;
            });
        verdict.outcome = Outcome::fails;
        verdict.witness = detail::confirmed_witness(
            s, id, std::move(phi), 1, u.size() + 1);
        return verdict;
      }
    }
    verdict.outcome = verdict.inconclusive.empty() ? Outcome::holds
                                                   : Outcome::undetermined;
    assert_balanced_guard(id, n, s, verdict);
    return verdict;
  }

  // w = v holds in U_n(S) iff floor(m_u^w) = floor(m_u^v) in S for every
  // non-empty u with |u| <= n - 1. Only u embedding in one side or the other
  // can differ, so those are the ones examined.
  template <Semiring S>
  Verdict<S> check_Un(Identity const&     id,
                      std::size_t         n,
                      S const&            s,
                      CheckOptions const& opts = {}) {
    detail::require_dimension(n, 1);
    auto const sigma = detail::checked_alphabet(id, opts);
    Verdict<S> verdict;
    verdict.criterion = "unitriangular subword multiplicities";
    if (n == 1) {
      return verdict;
    }
    auto const type       = classify_monogenic(s);
    auto       candidates = subword_set(id.lhs, n - 1);
    candidates.merge(subword_set(id.rhs, n - 1));
    for (auto const& u : candidates) {
      auto const mw = scattered_multiplicity(u, id.lhs);
      auto const mv = scattered_multiplicity(u, id.rhs);
      bool const eq = type.same_image(mw, mv);
      verdict.evidence.push_back({u,
                                  eq ? "equal" : "differ",
                                  "multiplicity in " + type.to_string(),
                                  detail::to_decimal(mw),
                                  detail::to_decimal(mv)});
      if (!eq) {
        verdict.outcome = Outcome::fails;
        verdict.witness = detail::unit_path_witness(s, id, sigma, n, u);
        return verdict;
      }
    }
    return verdict;
  }

  namespace detail {
    // Same scattered subwords of length <= k, with a Boolean-style witness
    // over S along the shortlex-least u found on one side only.
    template <Semiring S>
    Verdict<S> simon_verdict(Identity const&    id,
                             std::size_t        n,
                             S const&           s,
                             std::string const& sigma,
                             std::string        criterion) {
      Verdict<S> verdict;
      verdict.criterion = std::move(criterion);
      if (n == 1) {
        return verdict;
      }
      auto const lhs = subword_set(id.lhs, n - 1);
      auto const rhs = subword_set(id.rhs, n - 1);
      auto       all = lhs;
      all.insert(rhs.begin(), rhs.end());
      for (auto const& u : all) {
        bool const in_l = lhs.count(u) > 0, in_r = rhs.count(u) > 0;
        verdict.evidence.push_back({u,
                                    in_l && in_r ? "both" : "one side",
                                    "subword",
                                    in_l ? "1" : "0",
                                    in_r ? "1" : "0"});
        if (in_l != in_r) {
          verdict.outcome = Outcome::fails;
          verdict.witness = unit_path_witness(s, id, sigma, n, u);
          return verdict;
        }
      }
      return verdict;
    }
  }  // namespace detail

  // U_n(S) for idempotent S: w and v have the same scattered subwords of
  // length <= n - 1. The witness is Boolean.
  inline Verdict<Boolean> check_Un_idempotent(Identity const&     id,
                                              std::size_t         n,
                                              CheckOptions const& opts = {}) {
    detail::require_dimension(n, 1);
    auto const sigma = detail::checked_alphabet(id, opts);
    return detail::simon_verdict(id, n, Boolean(), sigma, "simon congruence");
  }

  // R_n(S) for an interval semiring: the same subword criterion, followed by
  // seeded random reflexive morphisms that must all agree with a Holds.
  template <Semiring S>
  Verdict<S> check_Rn(Identity const&     id,
                      std::size_t         n,
                      S const&            s,
                      CheckOptions const& opts = {}) {
    require_interval(s);
    detail::require_dimension(n, 1);
    auto const sigma = detail::checked_alphabet(id, opts);
    auto verdict = detail::simon_verdict(id, n, s, sigma, "reflexive subword criterion");
    if (verdict.holds()) {
      Rng rng(opts.seed);
      for (std::uint64_t t = 0; t < opts.rn_spot_checks; ++t) {
        Morphism<S> phi;
        for (Letter c : sigma) {
          phi.images.emplace(c, random_reflexive(s, n, rng));
        }
        ++verdict.spot_checks;
        if (!(evaluate(s, phi, id.lhs) == evaluate(s, phi, id.rhs))) {
          throw InconsistencyError("random reflexive morphism separates "
                                   + id.str() + " over " + s.name()
                                   + " although the subword criterion holds");
        }
      }
    }
    return verdict;
  }

  // U_n(S) and U_n(T) satisfy the same identities iff 1_S and 1_T generate
  // isomorphic semirings.
  template <Semiring S, Semiring T>
  bool same_variety_Un(S const& s, T const& t) {
    return classify_monogenic(s) == classify_monogenic(t);
  }

}  // namespace semiid
