#include "test_support.hpp"

#include "semiid/any_semiring.hpp"
#include "semiid/semiring.hpp"
#include "semiid/semirings.hpp"

namespace semiid {

  namespace {
    ExtendedRational q(long p, long d = 1) {
      return ExtendedRational::finite(BigRational(p, d));
    }
  }  // namespace

  TEST_CASE("add and mul on the shipped instances", "[semiring]") {
    Boolean const b;
    REQUIRE(add(b, true, true) == true);
    REQUIRE(add(b, false, true) == true);
    REQUIRE(mul(b, true, false) == false);

    MaxPlus const mp;
    REQUIRE(add(mp, q(3), q(5)) == q(5));
    REQUIRE(mul(mp, q(3), q(5)) == q(8));
    REQUIRE(add(mp, q(3), mp.zero()) == q(3));
    REQUIRE(mul(mp, q(3), mp.zero()) == mp.zero());

    UnitInterval const ui;
    REQUIRE(mul(ui, q(1, 2), q(1, 2)) == q(1, 4));
    REQUIRE(add(ui, q(1, 2), q(1, 3)) == q(1, 2));

    MinPlusInterval const mn;
    REQUIRE(add(mn, q(5), q(2)) == q(2));
    REQUIRE(mul(mn, q(5), mn.zero()) == mn.zero());

    DiamondLattice const d;
    auto const           a = d.parse("a"), c = d.parse("b");
    REQUIRE(add(d, a, c) == d.one());
    REQUIRE(mul(d, a, c) == d.zero());
  }

  TEST_CASE("identities are neutral and zero absorbs", "[semiring]") {
    auto check = [](auto const& s) {
      Rng rng(7);
      for (int k = 0; k < 50; ++k) {
        auto const a = s.sample(rng);
        REQUIRE(add(s, a, s.zero()) == a);
        REQUIRE(mul(s, a, s.one()) == a);
        REQUIRE(mul(s, a, s.zero()) == s.zero());
      }
    };
    check(Boolean());
    check(Naturals());
    check(TruncatedNaturals(2, 3));
    check(MaxPlus());
    check(MinPlusInterval());
    check(UnitInterval());
    check(DiamondLattice());
  }

  TEST_CASE("operands outside the carrier are rejected", "[semiring]") {
    MinPlusInterval const mn;
    REQUIRE_THROWS_AS(add(mn, ExtendedRational::negative_infinity(), q(1)),
                      InstanceMismatch);
    REQUIRE_THROWS_AS(add(mn, q(-1), q(1)), InstanceMismatch);
    UnitInterval const ui;
    REQUIRE_THROWS_AS(mul(ui, q(3, 2), q(1, 2)), InstanceMismatch);
    REQUIRE_THROWS_AS(ui.parse("2"), InstanceMismatch);
    TruncatedNaturals const t(2, 3);
    REQUIRE_THROWS_AS(add(t, Residue{9}, Residue{1}), InstanceMismatch);
  }

  TEST_CASE("natural_leq", "[semiring]") {
    Boolean const b;
    REQUIRE(natural_leq(b, false, true));
    REQUIRE_FALSE(natural_leq(b, true, false));
    MinPlusInterval const mn;
    // 5 (+) 2 = min(5, 2) = 2
    REQUIRE(natural_leq(mn, q(5), q(2)));
    REQUIRE_FALSE(natural_leq(mn, q(2), q(5)));
    UnitInterval const ui;
    REQUIRE(natural_leq(ui, q(1, 3), q(1, 3)));
    REQUIRE_THROWS_AS(natural_leq(Naturals(), Natural{1}, Natural{2}),
                      UnsupportedStructure);
  }

  TEST_CASE("nat_embed", "[semiring]") {
    REQUIRE(nat_embed(Boolean(), std::uint64_t(5)) == true);
    REQUIRE(nat_embed(Boolean(), std::uint64_t(0)) == false);
    REQUIRE(nat_embed(Naturals(), std::uint64_t(7)) == Natural{7});
    TruncatedNaturals const t(2, 3);
    // 2 + ((6 - 2) mod 3) = 3, confirmed by six explicit additions
    Residue sum = t.zero();
    for (int k = 0; k < 6; ++k) {
      sum = t.add(sum, t.one());
    }
    REQUIRE(sum == Residue{3});
    REQUIRE(nat_embed(t, std::uint64_t(6)) == nat_embed(t, std::uint64_t(3)));
    REQUIRE(nat_embed(t, std::uint64_t(6)) == sum);
    REQUIRE(nat_embed(MaxPlus(), BigInt(1) << 100) == MaxPlus().one());
    REQUIRE(nat_embed(Naturals(), BigInt(1) << 100) == Natural{BigInt(1) << 100});
  }

  TEST_CASE("classify_monogenic", "[semiring]") {
    REQUIRE(classify_monogenic(Boolean()) == Monogenic::cyclic(1, 1));
    REQUIRE(classify_monogenic(Naturals()) == Monogenic::free());
    REQUIRE(classify_monogenic(TruncatedNaturals(2, 3)) == Monogenic::cyclic(2, 3));
    REQUIRE(classify_monogenic(TruncatedNaturals(0, 4)) == Monogenic::cyclic(0, 4));
    REQUIRE(classify_monogenic(MaxPlus()) == Monogenic::cyclic(1, 1));
    REQUIRE(classify_monogenic(MinPlusInterval()) == Monogenic::cyclic(1, 1));
    REQUIRE(classify_monogenic(UnitInterval()) == Monogenic::cyclic(1, 1));
    REQUIRE(classify_monogenic(DiamondLattice()) == Monogenic::cyclic(1, 1));
    REQUIRE(Monogenic::cyclic(2, 3).to_string() == "Cyclic(2,3)");
    REQUIRE(Monogenic::free().to_string() == "Free");
  }

  TEST_CASE("structural flags", "[semiring]") {
    REQUIRE(Boolean().is_interval());
    REQUIRE_FALSE(Naturals().is_idempotent());
    REQUIRE(MaxPlus().is_idempotent());
    REQUIRE_FALSE(MaxPlus().is_interval());
    REQUIRE(MinPlusInterval().is_interval());
    REQUIRE(UnitInterval().is_interval());
    REQUIRE(DiamondLattice().is_interval());
    REQUIRE(TruncatedNaturals(1, 1).is_interval());
    REQUIRE_FALSE(TruncatedNaturals(2, 3).is_idempotent());
    REQUIRE(Naturals().has_free_rank1_element());
    REQUIRE(MaxPlus().has_free_rank1_element());
    REQUIRE_FALSE(Boolean().has_free_rank1_element());
    REQUIRE_FALSE(DiamondLattice().has_free_rank1_element());
  }

  TEST_CASE("samplers are deterministic given the seed", "[semiring]") {
    MaxPlus const mp;
    Rng           r1(42), r2(42);
    for (int k = 0; k < 100; ++k) {
      REQUIRE(mp.sample(r1) == mp.sample(r2));
    }
  }

  TEST_CASE("parse and format round trip", "[semiring]") {
    MaxPlus const mp;
    for (auto text : {"-inf", "0", "3/4", "-5/2", "7"}) {
      REQUIRE(mp.format(mp.parse(text)) == text);
    }
    MinPlusInterval const mn;
    REQUIRE(mn.format(mn.parse("inf")) == "inf");
    REQUIRE(mn.parse("+inf") == mn.zero());
    REQUIRE_THROWS_AS(mp.parse("1/0"), ParseError);
    REQUIRE_THROWS_AS(mp.parse("x"), ParseError);
  }

  TEST_CASE("semiring spec strings", "[semiring]") {
    for (auto spec : {"bool", "nat", "nat:2,3", "maxplus", "minplus01inf", "interval01",
                      "lattice:diamond"}) {
      REQUIRE(name(parse_semiring(spec)) == spec);
    }
    REQUIRE_THROWS_AS(parse_semiring("tropical"), ParseError);
    REQUIRE_THROWS_AS(parse_semiring("nat:2"), ParseError);
    REQUIRE_THROWS_AS(parse_semiring("nat:1,0"), ParseError);
  }

}  // namespace semiid
