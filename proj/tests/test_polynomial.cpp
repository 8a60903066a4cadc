#include "test_support.hpp"

#include "semiid/polynomial.hpp"
#include "semiid/semirings.hpp"
#include "semiid/verify/oracles.hpp"

namespace semiid {

  namespace {
    VariableId x(Letter c, std::size_t i) {
      return VariableId{c, i};
    }
    ExtendedRational q(long p, long d = 1) {
      return ExtendedRational::finite(BigRational(p, d));
    }
  }  // namespace

  TEST_CASE("build_f examples", "[poly]") {
    auto const f1 = build_f(Word(), {1}, Word("aab"), 1);
    REQUIRE(f1.terms().size() == 1);
    REQUIRE(f1.str() == "x(a,1)^2*x(b,1)");

    auto const f2 = build_f(Word("ab"), {1, 2, 3}, Word("ab"), 3);
    REQUIRE(f2.str() == "1");

    // embeddings at positions 1 and 2 of "aa"
    auto const f3 = build_f(Word("a"), {1, 2}, Word("aa"), 2);
    REQUIRE(f3.str() == "x(a,1) + x(a,2)");
    REQUIRE(f3 == oracle::f(Word("a"), {1, 2}, Word("aa"), "a"));

    REQUIRE(build_f_canonical(Word("a"), Word("aa")) == f3);
    REQUIRE(build_f_canonical(Word("ab"), Word("ab")) == f2);
    REQUIRE(build_f_canonical(Word(), Word("aab")) == f1);
  }

  TEST_CASE("build_f preconditions", "[poly]") {
    REQUIRE_THROWS_AS(build_f(Word("ab"), {1, 2}, Word("ab"), 2, "ab"), PreconditionError);
    REQUIRE_THROWS_AS(build_f(Word("a"), {2, 1}, Word("ab"), 2), PreconditionError);
    REQUIRE_THROWS_AS(build_f(Word("a"), {1}, Word("ab"), 2), PreconditionError);
    REQUIRE_THROWS_AS(build_f(Word("a"), {1, 3}, Word("ab"), 2), PreconditionError);
    REQUIRE_THROWS_AS(build_f(Word(), {1, 2}, Word("ab"), 2), PreconditionError);
  }

  TEST_CASE("zero polynomial iff u does not embed", "[poly]") {
    REQUIRE(build_f_canonical(Word("ba"), Word("aab")).is_zero());
    REQUIRE(build_f_canonical(Word("ba"), Word("aab")).str() == "0");
    REQUIRE_FALSE(build_f_canonical(Word("ab"), Word("aab")).is_zero());
  }

  TEST_CASE("coefficients and reduction", "[poly]") {
    FormalPolynomial r;
    r.add_term(Monomial{}, 3);
    REQUIRE(r.str() == "3");
    REQUIRE(r.capped().str() == "1");
    REQUIRE(r.reduced(Monogenic::cyclic(2, 3)).str() == "3");
    r.add_term(Monomial{}, 2);
    // 5 reduces to 2 in the cyclic type of index 2 and period 3
    REQUIRE(r.reduced(Monogenic::cyclic(2, 3)).str() == "2");
    REQUIRE(r.reduced(Monogenic::free()).str() == "5");
    REQUIRE_THROWS_AS(r.add_term(Monomial{{x('a', 1), 0}}, 1), PreconditionError);
  }

  TEST_CASE("relabeling", "[poly]") {
    auto const p = build_f(Word("a"), {1, 2}, Word("aa"), 3);
    auto const r = p.relabeled({{1, 2}, {2, 3}});
    REQUIRE(r == build_f(Word("a"), {2, 3}, Word("aa"), 3));
    REQUIRE(r.relabeled({{2, 1}, {3, 2}}) == p);
  }

  TEST_CASE("evaluate", "[poly]") {
    FormalPolynomial const zero;
    REQUIRE(evaluate(zero, Assignment<MaxPlus>{}, MaxPlus()) == MaxPlus().zero());

    FormalPolynomial sq({x('a', 1)});
    sq.add_term(Monomial{{x('a', 1), 2}}, 1);
    REQUIRE(evaluate(sq, Assignment<MaxPlus>{{x('a', 1), q(3)}}, MaxPlus()) == q(6));

    auto const f3 = build_f(Word("a"), {1, 2}, Word("aa"), 2);
    REQUIRE(evaluate(f3, Assignment<Boolean>{{x('a', 1), true}, {x('a', 2), true}}, Boolean()));
    REQUIRE_THROWS_AS(evaluate(f3, Assignment<Boolean>{{x('a', 1), true}}, Boolean()),
                      PreconditionError);
  }

  TEST_CASE("functionally_equivalent", "[poly]") {
    auto const p = build_f_canonical(Word("ab"), Word("abab"));
    auto const r = functionally_equivalent(p, p, MaxPlus());
    REQUIRE(r.status == EquivalenceStatus::equivalent);
    REQUIRE(r.method == EquivalenceMethod::canonical);

    // x^2 + x + 1 and x^2 + 1 agree as max-plus functions
    std::set<VariableId> const u{x('a', 1)};
    FormalPolynomial           lhs(u), rhs(u);
    lhs.add_term(Monomial{{x('a', 1), 2}}, 1);
    lhs.add_term(Monomial{{x('a', 1), 1}}, 1);
    lhs.add_term(Monomial{}, 1);
    rhs.add_term(Monomial{{x('a', 1), 2}}, 1);
    rhs.add_term(Monomial{}, 1);
    auto const m = functionally_equivalent(lhs, rhs, MaxPlus());
    REQUIRE(m.status == EquivalenceStatus::not_falsified);
    REQUIRE(m.method == EquivalenceMethod::sampled);
    REQUIRE(m.assignments_checked == 4096);

    // x vs x^2 over B: 2-point exhaustion
    FormalPolynomial a(u), b(u);
    a.add_term(Monomial{{x('a', 1), 1}}, 1);
    b.add_term(Monomial{{x('a', 1), 2}}, 1);
    auto const e = functionally_equivalent(a, b, Boolean());
    REQUIRE(e.status == EquivalenceStatus::equivalent);
    REQUIRE(e.method == EquivalenceMethod::exhaustive);
    REQUIRE(e.assignments_checked == 2);

    // x vs x^2 over N: falsified, with a concrete witness
    auto const n = functionally_equivalent(a, b, Naturals());
    REQUIRE(n.status == EquivalenceStatus::not_equivalent);
    REQUIRE(n.witness);
    REQUIRE(evaluate(a, *n.witness, Naturals()) != evaluate(b, *n.witness, Naturals()));

    FormalPolynomial other({x('b', 1)});
    REQUIRE_THROWS_AS(functionally_equivalent(a, other, Boolean()), PreconditionError);
  }

  TEST_CASE("first witness in enumeration order", "[poly]") {
    std::set<VariableId> const u{x('a', 1), x('b', 1)};
    FormalPolynomial           a(u), b(u);
    a.add_term(Monomial{{x('a', 1), 1}}, 1);
    b.add_term(Monomial{{x('b', 1), 1}}, 1);
    auto const r = functionally_equivalent(a, b, Boolean());
    REQUIRE(r.status == EquivalenceStatus::not_equivalent);
    // (a, b) runs 00, 01, ...; the first difference is a = 0, b = 1
    REQUIRE(r.witness->at(x('a', 1)) == false);
    REQUIRE(r.witness->at(x('b', 1)) == true);
  }

}  // namespace semiid
