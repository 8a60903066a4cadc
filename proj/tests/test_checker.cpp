#include "test_support.hpp"

#include "semiid/checker.hpp"
#include "semiid/monoid.hpp"
#include "semiid/semirings.hpp"

namespace semiid {

  namespace {
    Identity id(char const* text) {
      return Identity::parse(text);
    }

    template <Semiring S>
    void require_sound_witness(S const& s, Identity const& e, Verdict<S> const& v) {
      REQUIRE(v.fails());
      REQUIRE(v.witness);
      auto const& w   = *v.witness;
      auto const  lhs = evaluate(s, w.morphism, e.lhs);
      auto const  rhs = evaluate(s, w.morphism, e.rhs);
      REQUIRE(lhs == w.lhs_image);
      REQUIRE(rhs == w.rhs_image);
      REQUIRE_FALSE(lhs(w.row - 1, w.col - 1) == rhs(w.row - 1, w.col - 1));
    }
  }  // namespace

  TEST_CASE("check_UT", "[checker]") {
    Boolean const B;
    REQUIRE(check_UT(id("xy=yx"), 1, B).holds());
    REQUIRE(check_UT(id("xy=yx"), 1, Naturals()).holds());
    auto const v = check_UT(id("xy=yx"), 2, B);
    require_sound_witness(B, id("xy=yx"), v);
    REQUIRE_FALSE(brute_force_identity(id("xy=yx"), upper_triangular_boolean(2)).holds);
    for (auto text : {"abab=abab", "x=x", "xyzzy=xyzzy"}) {
      REQUIRE(check_UT(id(text), 3, B).holds());
      REQUIRE(check_UT(id(text), 3, MaxPlus()).outcome != Outcome::fails);
    }
    require_sound_witness(Naturals(), id("x=xx"), check_UT(id("x=xx"), 2, Naturals()));
    REQUIRE_THROWS_AS(check_UT(id("x=x"), 0, B), PreconditionError);
  }

  TEST_CASE("check_UT agrees with brute force over UT_2(B) and UT_3(B)", "[checker]") {
    Boolean const B;
    auto const    UT2 = upper_triangular_boolean(2);
    auto const    UT3 = upper_triangular_boolean(3);
    for (auto text : {"xy=yx", "xx=xxx", "xyx=xxy", "xyxy=yxyx", "xyyx=yxxy", "x=xx"}) {
      REQUIRE(check_UT(id(text), 2, B).holds()
              == brute_force_identity(id(text), UT2).holds);
      REQUIRE(check_UT(id(text), 3, B).holds()
              == brute_force_identity(id(text), UT3).holds);
    }
  }

  TEST_CASE("check_Un", "[checker]") {
    Boolean const B;
    Naturals const N;
    REQUIRE(check_Un(id("abab=abba"), 3, B).holds());
    REQUIRE(brute_force_identity(id("abab=abba"), unitriangular_boolean(3)).holds);
    auto const nv = check_Un(id("abab=abba"), 3, N);
    require_sound_witness(N, id("abab=abba"), nv);
    REQUIRE(nv.evidence.back().u == Word("ab"));
    REQUIRE(nv.evidence.back().lhs == "3");
    REQUIRE(nv.evidence.back().rhs == "2");
    auto const bv = check_Un(id("abab=abba"), 4, B);
    require_sound_witness(B, id("abab=abba"), bv);
    // "aab" is the shortlex-least one-sided subword; "bab" is another
    REQUIRE(bv.evidence.back().u == Word("aab"));
    REQUIRE(subword_set(Word("abab"), 3).count(Word("bab")) == 1);
    REQUIRE(subword_set(Word("abba"), 3).count(Word("bab")) == 0);
    REQUIRE(check_Un(id("x=xx"), 1, N).holds());
    require_sound_witness(N, id("x=xx"), check_Un(id("x=xx"), 2, N));
  }

  TEST_CASE("check_Un over a truncated type", "[checker]") {
    // m_x(x^2) = 2 and m_x(x^5) = 5 agree in index 2, period 3
    TruncatedNaturals const t(2, 3);
    REQUIRE(check_Un(id("xx=xxxxx"), 2, t).holds());
    REQUIRE(check_Un(id("xx=xxxx"), 2, t).fails());
    REQUIRE(check_Un(id("xx=xxxxx"), 2, Naturals()).fails());
  }

  TEST_CASE("check_Un_idempotent", "[checker]") {
    REQUIRE(check_Un_idempotent(id("abab=abba"), 3).holds());
    REQUIRE(check_Un_idempotent(id("abab=abba"), 4).fails());
    REQUIRE(check_Un_idempotent(id("x=xx"), 2).holds());
    auto const v = check_Un_idempotent(id("x=xx"), 3);
    require_sound_witness(Boolean(), id("x=xx"), v);
    REQUIRE(v.evidence.back().u == Word("xx"));
    for (auto text : {"abab=abba", "x=xx", "xy=yx", "xyx=xxy"}) {
      for (std::size_t n = 2; n <= 4; ++n) {
        REQUIRE(check_Un_idempotent(id(text), n).outcome
                == check_Un(id(text), n, Boolean()).outcome);
        REQUIRE(check_Un_idempotent(id(text), n).outcome
                == check_Un(id(text), n, DiamondLattice()).outcome);
      }
    }
  }

  TEST_CASE("check_Rn", "[checker]") {
    MinPlusInterval const m;
    UnitInterval const    i;
    auto const            h = check_Rn(id("abab=abba"), 3, m);
    REQUIRE(h.holds());
    REQUIRE(h.spot_checks == 1000);
    require_sound_witness(i, id("abab=abba"), check_Rn(id("abab=abba"), 4, i));
    REQUIRE(check_Rn(id("xyz=xyz"), 4, i).holds());
    REQUIRE_THROWS_AS(check_Rn(id("x=x"), 2, Naturals()), UnsupportedStructure);
    REQUIRE(brute_force_identity(id("abab=abba"), boolean_family(Family::reflexive, 3)).holds);
    BruteForceOptions wide;
    wide.budget = 20'000'000;
    REQUIRE_FALSE(
        brute_force_identity(id("abab=abba"), boolean_family(Family::reflexive, 4), wide).holds);
  }

  TEST_CASE("balanced guard", "[checker]") {
    REQUIRE(requires_balanced(Naturals()));
    REQUIRE(requires_balanced(MaxPlus()));
    REQUIRE(requires_balanced(MinPlusInterval()));
    REQUIRE(requires_balanced(UnitInterval()));
    REQUIRE_FALSE(requires_balanced(Boolean()));
    REQUIRE_FALSE(requires_balanced(DiamondLattice()));
    Verdict<Naturals> fake;
    REQUIRE_FALSE(balanced_guard_consistent(id("x=xx"), 2, Naturals(), fake));
    REQUIRE(balanced_guard_consistent(id("x=xx"), 1, Naturals(), fake));
    REQUIRE_THROWS_AS(assert_balanced_guard(id("x=xx"), 2, Naturals(), fake),
                      InconsistencyError);
    auto const v = check_UT(id("x=xx"), 2, Naturals());
    REQUIRE(v.fails());
    REQUIRE(balanced_guard_consistent(id("x=xx"), 2, Naturals(), v));
  }

  TEST_CASE("same_variety_Un", "[checker]") {
    REQUIRE(same_variety_Un(Boolean(), UnitInterval()));
    REQUIRE_FALSE(same_variety_Un(Naturals(), Boolean()));
    REQUIRE(same_variety_Un(TruncatedNaturals(2, 3), TruncatedNaturals(2, 3)));
    REQUIRE_FALSE(same_variety_Un(TruncatedNaturals(2, 3), TruncatedNaturals(2, 2)));
  }

  TEST_CASE("alphabet limit", "[checker]") {
    CheckOptions opts;
    opts.max_alphabet = 2;
    REQUIRE_THROWS_AS(check_Un(id("xyz=zyx"), 2, Boolean(), opts), PreconditionError);
  }

  TEST_CASE("outcome names", "[checker]") {
    REQUIRE(to_string(Outcome::holds) == "holds");
    REQUIRE(to_string(Outcome::fails) == "fails");
    REQUIRE(to_string(Outcome::undetermined) == "undetermined");
  }

}  // namespace semiid
