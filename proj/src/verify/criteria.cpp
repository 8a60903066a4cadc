#include "semiid/verify/criteria.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "semiid/any_semiring.hpp"
#include "semiid/checker.hpp"
#include "semiid/matrix.hpp"
#include "semiid/monoid.hpp"
#include "semiid/semirings.hpp"
#include "semiid/verify/corpus.hpp"
#include "semiid/verify/oracles.hpp"

namespace semiid::verify {

  namespace {
    // Pinned limits.
    constexpr double        catalan_seconds     = 10.0;
    constexpr double        equivalence_seconds = 300.0;
    constexpr std::uint64_t entry_trials        = 1000;
    constexpr std::uint64_t power_trials        = 1000;
    constexpr std::size_t   ut3_sample          = 200;
    constexpr std::uint64_t transfer_samples    = 10'000;

    using clock = std::chrono::steady_clock;

    double since(clock::time_point t0) {
      return std::chrono::duration<double>(clock::now() - t0).count();
    }

    std::string str(std::uint64_t x) {
      return std::to_string(x);
    }

    Word random_word(Rng& rng, std::string const& sigma, std::size_t len) {
      std::string s(len, 'a');
      for (auto& c : s) {
        c = sigma[draw_below(rng, sigma.size())];
      }
      return Word(s);
    }

    ////////////////////////////////////////////////////////////////////////

    CriterionResult catalan_counts(VerifyOptions const&) {
      CriterionResult r{1, "Catalan counts of catalanU(n), n = 1..6", {}, 0};
      auto const      t0       = clock::now();
      std::uint64_t const expected[] = {1, 2, 5, 14, 42, 132};
      for (std::size_t n = 1; n <= 6; ++n) {
        auto const size = boolean_family(Family::catalan_upper, n).size();
        r.lines.push_back({"n = " + str(n),
                           size == expected[n - 1] && size == catalan_number(n),
                           str(size) + " elements, expected " + str(expected[n - 1])});
      }
      double const t = since(t0);
      char         buf[64];
      std::snprintf(buf, sizeof buf, "%.3f s, limit %.0f s", t, catalan_seconds);
      r.lines.push_back({"time", t < catalan_seconds, buf});
      return r;
    }

    CriterionResult presentation(VerifyOptions const&) {
      CriterionResult r{2, "Catalan presentation relations for D(i), n = 2..6", {}, 0};
      for (std::size_t n = 2; n <= 6; ++n) {
        auto const    check  = check_catalan_presentation(n);
        std::size_t   failed = 0;
        std::string   first;
        for (auto const& rel : check.relations) {
          if (!rel.holds) {
            if (failed++ == 0) {
              first = rel.lhs + " = " + rel.rhs;
            }
          }
        }
        r.lines.push_back({"n = " + str(n),
                           check.all_hold(),
                           str(check.relations.size()) + " relations, "
                               + str(failed) + " violated" + (first.empty() ? "" : " (" + first + ")")
                               + ", closure " + str(check.closure_size) + " of "
                               + str(check.catalan_number)});
      }
      return r;
    }

    template <Semiring S>
    CriterionLine walk_trials(S const& s, std::uint64_t seed) {
      Rng           rng(seed);
      std::uint64_t mismatches = 0;
      std::string   first;
      for (std::uint64_t t = 0; t < entry_trials; ++t) {
        std::size_t const n     = 1 + draw_below(rng, 4);
        std::string const sigma = std::string("abc").substr(0, 1 + draw_below(rng, 3));
        Morphism<S>       phi;
        for (Letter c : sigma) {
          phi.images.emplace(c, random_upper_triangular(s, n, rng));
        }
        Word const        w = random_word(rng, sigma, 1 + draw_below(rng, 6));
        std::size_t const i = 1 + draw_below(rng, n);
        std::size_t const j = 1 + draw_below(rng, n);
        auto const formula  = walk_entry(s, phi, w, i, j);
        auto const direct   = evaluate(s, phi, w)(i - 1, j - 1);
        if (!(formula == direct) && mismatches++ == 0) {
          first = "w=" + w.str() + " (" + str(i) + "," + str(j) + ")";
        }
      }
      return {s.name(), mismatches == 0,
              str(entry_trials) + " trials, " + str(mismatches) + " mismatches"
                  + (first.empty() ? "" : ", first " + first)};
    }

    CriterionResult entry_formula(VerifyOptions const& opts) {
      CriterionResult r{3, "walk expansion equals the product entry in UT_n(S)", {}, 0};
      r.lines.push_back(walk_trials(Boolean(), opts.seed + 3));
      r.lines.push_back(walk_trials(TruncatedNaturals(2, 3), opts.seed + 33));
      return r;
    }

    template <Semiring S>
    CriterionLine block_chain_trials(S const& s, std::uint64_t seed) {
      Rng           rng(seed);
      std::uint64_t mismatches = 0;
      for (std::uint64_t t = 0; t < entry_trials; ++t) {
        std::size_t const      n = 1 + draw_below(rng, 4);
        std::size_t const      L = 1 + draw_below(rng, 5);
        std::vector<Matrix<S>> factors;
        for (std::size_t k = 0; k < L; ++k) {
          factors.push_back(random_reflexive(s, n, rng));
        }
        std::size_t const i = 1 + draw_below(rng, n);
        std::size_t const j = 1 + draw_below(rng, n);
        if (!(block_chain_entry(s, factors, i, j) == product(s, factors, n)(i - 1, j - 1))) {
          ++mismatches;
        }
      }
      return {s.name(), mismatches == 0,
              str(entry_trials) + " trials, " + str(mismatches) + " mismatches"};
    }

    CriterionResult block_chain(VerifyOptions const& opts) {
      CriterionResult r{4, "block-chain sum equals the product entry in R_n(S)", {}, 0};
      r.lines.push_back(block_chain_trials(Boolean(), opts.seed + 4));
      r.lines.push_back(block_chain_trials(UnitInterval(), opts.seed + 44));
      r.lines.push_back(block_chain_trials(MinPlusInterval(), opts.seed + 444));
      return r;
    }

    template <Semiring S>
    CriterionLine power_trials_for(S const& s, std::uint64_t seed) {
      Rng           rng(seed);
      std::uint64_t failures = 0;
      for (std::uint64_t t = 0; t < power_trials; ++t) {
        std::size_t const n = 1 + draw_below(rng, 5);
        Matrix<S> const   A = random_reflexive(s, n, rng);
        // Plain repeated multiplication, independent of power_stabilize.
        std::vector<Matrix<S>> powers{identity(s, n)};
        for (std::size_t N = 1; N <= 2 * n; ++N) {
          powers.push_back(detail::multiply_unchecked(s, powers.back(), A));
        }
        bool ok = true;
        for (std::size_t N = n - 1; N <= 2 * n; ++N) {
          ok = ok && powers[N] == powers[n - 1];
        }
        ok = ok
             && detail::multiply_unchecked(s, powers[n - 1], powers[n - 1])
                    == powers[n - 1];
        try {
          ok = ok && power_stabilize(s, A) == powers[n - 1];
        } catch (InconsistencyError const&) {
          ok = false;
        }
        failures += ok ? 0 : 1;
      }
      return {s.name(), failures == 0,
              str(power_trials) + " matrices, " + str(failures) + " failures"};
    }

    CriterionResult aperiodicity(VerifyOptions const& opts) {
      CriterionResult r{5, "A^(n-1) = A^N for n-1 <= N <= 2n and is idempotent", {}, 0};
      r.lines.push_back(power_trials_for(Boolean(), opts.seed + 5));
      r.lines.push_back(power_trials_for(UnitInterval(), opts.seed + 55));
      r.lines.push_back(power_trials_for(MinPlusInterval(), opts.seed + 555));
      r.lines.push_back(power_trials_for(DiamondLattice(), opts.seed + 5555));
      return r;
    }

    CriterionResult checker_equivalence(VerifyOptions const&) {
      CriterionResult r{6, "U_n(B) criteria agree with brute force, n = 2, 3", {}, 0};
      auto const      t0  = clock::now();
      auto const      ids = corpus::all_pairs_xy(5);
      for (std::size_t n = 2; n <= 3; ++n) {
        auto const    M = unitriangular_boolean(n);
        std::uint64_t disagreements = 0, holds = 0;
        std::string   first;
        for (auto const& id : ids) {
          bool const a = check_Un(id, n, Boolean()).holds();
          bool const b = check_Un_idempotent(id, n).holds();
          bool const c = brute_force_identity(id, M).holds;
          holds += c ? 1 : 0;
          if ((a != b || b != c) && disagreements++ == 0) {
            first = id.str();
          }
        }
        r.lines.push_back({"n = " + str(n), disagreements == 0,
                           str(ids.size()) + " identities, " + str(holds) + " hold, "
                               + str(disagreements) + " disagreements"
                               + (first.empty() ? "" : ", first " + first)});
      }
      double const t = since(t0);
      char         buf[64];
      std::snprintf(buf, sizeof buf, "%.3f s, limit %.0f s", t, equivalence_seconds);
      r.lines.push_back({"time", t < equivalence_seconds, buf});
      return r;
    }

    CriterionResult ut_oracle(VerifyOptions const& opts) {
      CriterionResult r{7, "UT_n(B) criterion agrees with brute force", {}, 0};
      auto const      ids = corpus::standard();
      auto run = [&](std::size_t n, std::vector<Identity> const& sample) {
        auto const    M = upper_triangular_boolean(n);
        std::uint64_t disagreements = 0, holds = 0;
        std::string   first;
        for (auto const& id : sample) {
          bool const a = check_UT(id, n, Boolean()).holds();
          bool const b = brute_force_identity(id, M).holds;
          holds += b ? 1 : 0;
          if (a != b && disagreements++ == 0) {
            first = id.str();
          }
        }
        r.lines.push_back({"UT_" + str(n) + " (" + str(M.size()) + " elements)",
                           disagreements == 0,
                           str(sample.size()) + " identities, " + str(holds) + " hold, "
                               + str(disagreements) + " disagreements"
                               + (first.empty() ? "" : ", first " + first)});
      };
      run(2, ids);
      auto picked = ids;
      Rng  rng(opts.seed + 7);
      for (std::size_t k = picked.size(); k > 1; --k) {
        std::swap(picked[k - 1], picked[draw_below(rng, k)]);
      }
      picked.resize(std::min(ut3_sample, picked.size()));
      run(3, picked);
      return r;
    }

    CriterionResult monogenic_consistency(VerifyOptions const&) {
      CriterionResult r{8, "U_n verdicts depend only on the monogenic type", {}, 0};
      auto const      ids = corpus::standard();
      std::uint64_t   differing = 0, compared = 0;
      std::string     first;
      for (std::size_t n = 2; n <= 4; ++n) {
        for (auto const& id : ids) {
          bool const b = check_Un(id, n, Boolean()).holds();
          bool const i = check_Un(id, n, UnitInterval()).holds();
          bool const m = check_Un(id, n, MinPlusInterval()).holds();
          bool const d = check_Un(id, n, DiamondLattice()).holds();
          ++compared;
          if (!(b == i && i == m && m == d) && differing++ == 0) {
            first = id.str() + " n=" + str(n);
          }
        }
      }
      r.lines.push_back({"bool, interval01, minplus01inf, lattice:diamond (n = 2..4)",
                         differing == 0,
                         str(compared) + " checks, " + str(differing) + " differ"
                             + (first.empty() ? "" : ", first " + first)});

      auto const id = Identity::parse("abab=abba");
      auto differs  = [&](auto const& s) {
        auto const v = check_Un(id, 3, s);
        std::string w;
        if (v.witness) {
          w = ", witness at (" + str(v.witness->row) + "," + str(v.witness->col)
              + ") on u = " + v.evidence.back().u.str();
        }
        return CriterionLine{s.name() + " differs from bool on abab=abba, n = 3",
                             v.fails() && check_Un(id, 3, Boolean()).holds(),
                             to_string(v.outcome) + w};
      };
      r.lines.push_back(differs(Naturals()));
      r.lines.push_back(differs(TruncatedNaturals(2, 3)));
      return r;
    }

    template <Semiring S>
    void balanced_lines(CriterionResult& r, S const& s, std::vector<Identity> const& ids) {
      std::uint64_t holds = 0, unbalanced = 0;
      std::string   first;
      for (std::size_t n = 2; n <= 4; ++n) {
        for (auto const& id : ids) {
          auto const v = check_Un(id, n, s);
          if (v.holds()) {
            ++holds;
            if (!balanced_guard_consistent(id, n, s, v) && unbalanced++ == 0) {
              first = id.str() + " n=" + str(n);
            }
          }
        }
      }
      r.lines.push_back({s.name() + ": U_n Holds only on balanced identities (n = 2..4)",
                         unbalanced == 0,
                         str(holds) + " Holds, " + str(unbalanced) + " unbalanced"
                             + (first.empty() ? "" : ", first " + first)});
      auto const v = check_Un(Identity::parse("x=xx"), 2, s);
      r.lines.push_back({s.name() + ": x=xx fails in U_2", v.fails(), to_string(v.outcome)});

      // The same guard for UT_n, whose polynomial criterion it derives from.
      std::uint64_t ut_holds = 0, ut_unbalanced = 0, ut_open = 0;
      for (auto const& id : ids) {
        auto const u = check_UT(id, 2, s);
        ut_open += u.outcome == Outcome::undetermined ? 1 : 0;
        if (u.holds()) {
          ++ut_holds;
          ut_unbalanced += is_balanced(id) ? 0 : 1;
        }
      }
      auto const ut = check_UT(Identity::parse("x=xx"), 2, s);
      r.lines.push_back({s.name() + ": UT_2 Holds only on balanced identities, x=xx fails",
                         ut_unbalanced == 0 && ut.fails(),
                         str(ut_holds) + " Holds, " + str(ut_unbalanced)
                             + " unbalanced, " + str(ut_open) + " undetermined; x=xx "
                             + to_string(ut.outcome)});
    }

    CriterionResult balanced_guard(VerifyOptions const&) {
      CriterionResult r{9, "balanced guard over nat and maxplus", {}, 0};
      auto const      ids = corpus::standard();
      balanced_lines(r, Naturals(), ids);
      balanced_lines(r, MaxPlus(), ids);
      return r;
    }

    CriterionResult upper_profile_morphism(VerifyOptions const&) {
      CriterionResult r{10, "upper profile maps DC_n onto catalanU(n), n <= 4", {}, 0};
      Boolean const   s;
      for (std::size_t n = 1; n <= 4; ++n) {
        auto const    DC = boolean_family(Family::double_catalan, n);
        auto const    C  = boolean_family(Family::catalan_upper, n);
        std::uint64_t bad = 0, nonconvex = 0;
        std::set<std::string> image;
        for (auto const& A : DC.elements) {
          nonconvex += is_convex(A) ? 0 : 1;
          image.insert(format_matrix(s, upper_profile(A)));
          for (auto const& B : DC.elements) {
            if (!(upper_profile(multiply(s, A, B))
                  == multiply(s, upper_profile(A), upper_profile(B)))) {
              ++bad;
            }
          }
        }
        std::set<std::string> target;
        for (auto const& A : C.elements) {
          target.insert(format_matrix(s, A));
        }
        r.lines.push_back({"n = " + str(n),
                           bad == 0 && nonconvex == 0 && image == target,
                           str(DC.size() * DC.size()) + " pairs, " + str(bad)
                               + " non-multiplicative, image " + str(image.size())
                               + " of " + str(target.size())
                               + (image == target ? " (equal)" : " (different)")});
      }
      return r;
    }

    CriterionResult transfer(VerifyOptions const& opts) {
      CriterionResult r{11, "identities transfer to DC_3, G_3 and their relatives", {}, 0};
      auto const      ids      = corpus::standard();
      auto const      dc       = boolean_family(Family::double_catalan, 3);
      auto const      gossip   = boolean_family(Family::gossip, 3);
      auto const      one_way  = boolean_family(Family::one_way_gossip, 3);
      MinPlusInterval const mp;
      auto const      lossy    = family(mp, Family::gossip_s, 3, mp.default_scalars());

      std::uint64_t failing = 0, passing = 0;
      std::uint64_t missed_dc = 0, missed_g = 0, broke_one_way = 0, broke_lossy = 0;
      std::string   first;
      for (std::size_t k = 0; k < ids.size(); ++k) {
        auto const& id = ids[k];
        if (!oracle::simon(id.lhs, id.rhs, 2)) {
          ++failing;
          bool const a = !brute_force_identity(id, dc).holds;
          bool const b = !brute_force_identity(id, gossip).holds;
          missed_dc += a ? 0 : 1;
          missed_g += b ? 0 : 1;
          if ((!a || !b) && first.empty()) {
            first = id.str();
          }
        } else {
          ++passing;
          BruteForceOptions sampled;
          sampled.sampled = true;
          sampled.samples = transfer_samples;
          sampled.seed    = opts.seed + 11 + k;
          bool const a    = brute_force_identity(id, one_way, sampled).holds;
          bool const b    = brute_force_identity(id, lossy, sampled).holds;
          broke_one_way += a ? 0 : 1;
          broke_lossy += b ? 0 : 1;
          if ((!a || !b) && first.empty()) {
            first = id.str();
          }
        }
      }
      r.lines.push_back({"failing identities falsified in DC_3 (" + str(dc.size()) + ")",
                         missed_dc == 0,
                         str(failing) + " identities, " + str(missed_dc) + " survive"});
      r.lines.push_back({"failing identities falsified in G_3 (" + str(gossip.size()) + ")",
                         missed_g == 0,
                         str(failing) + " identities, " + str(missed_g) + " survive"});
      r.lines.push_back({"passing identities hold on sampled one-way G_3 (" + str(one_way.size()) + ")",
                         broke_one_way == 0,
                         str(passing) + " identities x " + str(transfer_samples) + " morphisms, "
                             + str(broke_one_way) + " violations"});
      r.lines.push_back({"passing identities hold on sampled G_3(minplus01inf) ("
                             + str(lossy.size()) + ")",
                         broke_lossy == 0,
                         str(passing) + " identities x " + str(transfer_samples) + " morphisms, "
                             + str(broke_lossy) + " violations"
                             + (first.empty() ? "" : ", first " + first)});
      return r;
    }

    CriterionResult inclusions(VerifyOptions const&) {
      CriterionResult r{12, "DC_n in G_n in one-way G_n in R_n, n = 2..4", {}, 0};
      for (std::size_t n = 2; n <= 4; ++n) {
        auto const  report = check_inclusions(n);
        std::string detail;
        for (auto const& c : report.checks) {
          if (!detail.empty()) {
            detail += ", ";
          }
          detail += c.sub + "(" + str(c.sub_size) + ")" + (c.contained ? " <= " : " !<= ")
                    + c.super + "(" + str(c.super_size) + ")" + (c.capped ? " [capped]" : "");
        }
        r.lines.push_back({"n = " + str(n), report.all_contained(), detail});
      }
      return r;
    }

    ////////////////////////////////////////////////////////////////////////

    template <Semiring S>
    CriterionLine laws_for(S const& s, std::uint64_t seed) {
      using V = value_t<S>;
      std::vector<V> pool;
      auto const     carrier = s.elements();
      Rng            rng(seed);
      if (carrier && carrier->size() <= 16) {
        pool.assign(carrier->begin(), carrier->end());
      } else {
        for (int k = 0; k < 8; ++k) {
          pool.push_back(s.sample(rng));
        }
        pool.push_back(s.zero());
        pool.push_back(s.one());
      }
      std::uint64_t violations = 0, triples = 0;
      auto leq = [&](V const& a, V const& b) { return s.add(a, b) == b; };
      for (auto const& a : pool) {
        violations += s.add(a, s.zero()) == a ? 0 : 1;
        violations += s.mul(a, s.one()) == a ? 0 : 1;
        violations += s.mul(a, s.zero()) == s.zero() ? 0 : 1;
        if (s.is_idempotent()) {
          violations += s.add(a, a) == a ? 0 : 1;
        }
        if (s.is_interval()) {
          violations += leq(a, s.one()) ? 0 : 1;
        }
        for (auto const& b : pool) {
          violations += s.add(a, b) == s.add(b, a) ? 0 : 1;
          violations += s.mul(a, b) == s.mul(b, a) ? 0 : 1;
          for (auto const& c : pool) {
            ++triples;
            violations += s.add(s.add(a, b), c) == s.add(a, s.add(b, c)) ? 0 : 1;
            violations += s.mul(s.mul(a, b), c) == s.mul(a, s.mul(b, c)) ? 0 : 1;
            violations += s.mul(a, s.add(b, c)) == s.add(s.mul(a, b), s.mul(a, c)) ? 0 : 1;
            if (s.is_idempotent() && leq(a, b)) {
              violations += leq(s.mul(c, a), s.mul(c, b)) ? 0 : 1;
              violations += leq(s.add(a, c), s.add(b, c)) ? 0 : 1;
            }
          }
        }
      }
      for (std::uint64_t j = 0; j <= 32; ++j) {
        for (std::uint64_t k = 0; k <= 32; ++k) {
          violations += nat_embed(s, j + k) == s.add(nat_embed(s, j), nat_embed(s, k)) ? 0 : 1;
        }
      }
      return {s.name() + " (" + classify_monogenic(s).to_string() + ")",
              violations == 0,
              str(triples) + " triples, " + str(violations) + " violations"};
    }

    std::vector<CriterionResult (*)(VerifyOptions const&)> const criteria = {
        catalan_counts,
        presentation,
        entry_formula,
        block_chain,
        aperiodicity,
        checker_equivalence,
        ut_oracle,
        monogenic_consistency,
        balanced_guard,
        upper_profile_morphism,
        transfer,
        inclusions};
  }  // namespace

  CriterionResult run_criterion(int number, VerifyOptions const& opts) {
    if (number < 1 || number > criterion_count) {
      throw PreconditionError("no criterion " + std::to_string(number));
    }
    auto const t0 = clock::now();
    auto       r  = criteria[number - 1](opts);
    r.seconds     = since(t0);
    return r;
  }

  CriterionResult semiring_axioms(VerifyOptions const& opts) {
    auto const      t0 = clock::now();
    CriterionResult r{0, "semiring laws, order compatibility and nat_embed", {}, 0};
    r.lines.push_back(laws_for(Boolean(), opts.seed));
    r.lines.push_back(laws_for(Naturals(), opts.seed + 1));
    r.lines.push_back(laws_for(TruncatedNaturals(2, 3), opts.seed + 2));
    r.lines.push_back(laws_for(MaxPlus(), opts.seed + 3));
    r.lines.push_back(laws_for(MinPlusInterval(), opts.seed + 4));
    r.lines.push_back(laws_for(UnitInterval(), opts.seed + 5));
    r.lines.push_back(laws_for(DiamondLattice(), opts.seed + 6));
    r.seconds = since(t0);
    return r;
  }

  CriterionResult word_oracles(VerifyOptions const& opts) {
    auto const      t0 = clock::now();
    CriterionResult r{0, "word and polynomial routines against enumeration", {}, 0};
    auto const      words = words_up_to("ab", 8, 1);
    auto const      us    = words_up_to("ab", 4, 1);

    std::uint64_t bad_m = 0, bad_set = 0, bad_link = 0;
    for (auto const& w : words) {
      for (std::size_t k = 1; k <= 4; ++k) {
        bad_set += subword_set(w, k) == oracle::subwords(w, k) ? 0 : 1;
      }
      auto const subs = subword_set(w, 4);
      for (auto const& u : us) {
        auto const m = scattered_multiplicity(u, w);
        bad_m += m == oracle::multiplicity(u, w) ? 0 : 1;
        bad_link += (m > 0) == (subs.count(u) > 0) ? 0 : 1;
      }
    }
    r.lines.push_back({"multiplicities, |w| <= 8, |u| <= 4", bad_m == 0,
                       str(words.size() * us.size()) + " pairs, " + str(bad_m) + " mismatches"});
    r.lines.push_back({"subword sets, |w| <= 8, k <= 4", bad_set == 0,
                       str(words.size() * 4) + " sets, " + str(bad_set) + " mismatches"});
    r.lines.push_back({"m_u^w > 0 iff u is a subword", bad_link == 0, str(bad_link) + " mismatches"});

    Rng           rng(opts.seed + 100);
    std::uint64_t bad_sum = 0;
    for (int t = 0; t < 100; ++t) {
      auto const w = random_word(rng, "abc", 1 + draw_below(rng, 12));
      for (std::size_t k = 1; k <= w.size(); ++k) {
        BigInt total = 0;
        for (auto const& u : words_up_to(alphabet(w), k, k)) {
          total += scattered_multiplicity(u, w);
        }
        bad_sum += total == oracle::binomial(w.size(), k) ? 0 : 1;
      }
    }
    r.lines.push_back({"sum of m_u^w over |u| = k is C(|w|, k)", bad_sum == 0,
                       str(bad_sum) + " mismatches"});

    std::uint64_t bad_f = 0, bad_eval = 0;
    auto const    short_words = words_up_to("ab", 6, 1);
    for (auto const& w : short_words) {
      for (auto const& u : words_up_to("ab", 2)) {
        auto const p = build_f_canonical(u, w, "ab");
        std::vector<std::size_t> rho;
        for (std::size_t k = 1; k <= u.size() + 1; ++k) {
          rho.push_back(k);
        }
        bad_f += p == oracle::f(u, rho, w, "ab") ? 0 : 1;
        if (!u.empty()) {
          Assignment<Naturals> ones;
          for (auto const& v : p.universe()) {
            ones[v] = Natural{1};
          }
          bad_eval += evaluate(p, ones, Naturals()).value == oracle::multiplicity(u, w) ? 0 : 1;
        }
      }
    }
    r.lines.push_back({"f_u^w against embedding enumeration, |w| <= 6", bad_f == 0,
                       str(bad_f) + " mismatches"});
    r.lines.push_back({"f_u^w at all ones over nat is m_u^w", bad_eval == 0,
                       str(bad_eval) + " mismatches"});
    r.seconds = since(t0);
    return r;
  }

  std::vector<std::string> suite_names() {
    return {"semiring-axioms",
            "word-oracles",
            "entry-formulas",
            "closure-counts",
            "checker-equivalence",
            "transfer-properties"};
  }

  std::vector<CriterionResult> run_suite(std::string_view suite, VerifyOptions const& opts) {
    std::vector<int> numbers;
    if (suite == "semiring-axioms") {
      return {semiring_axioms(opts)};
    } else if (suite == "word-oracles") {
      return {word_oracles(opts)};
    } else if (suite == "entry-formulas") {
      numbers = {3, 4, 5};
    } else if (suite == "closure-counts") {
      numbers = {1, 2, 10, 12};
    } else if (suite == "checker-equivalence") {
      numbers = {6, 7, 8, 9};
    } else if (suite == "transfer-properties") {
      numbers = {11};
    } else {
      throw PreconditionError("unknown suite '" + std::string(suite) + "'");
    }
    std::vector<CriterionResult> out;
    for (int k : numbers) {
      out.push_back(run_criterion(k, opts));
    }
    return out;
  }

  std::string format_result(CriterionResult const& r) {
    std::ostringstream out;
    char               buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", r.seconds);
    out << (r.passed() ? "PASS" : "FAIL");
    if (r.number > 0) {
      out << " [" << r.number << "]";
    }
    out << " " << r.title << " (" << buf << ")\n";
    for (auto const& l : r.lines) {
      out << "    " << (l.passed ? "ok   " : "FAIL ") << l.label << ": " << l.detail << "\n";
    }
    return out.str();
  }

}  // namespace semiid::verify
