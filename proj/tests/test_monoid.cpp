#include "test_support.hpp"

#include "semiid/monoid.hpp"
#include "semiid/semirings.hpp"

namespace semiid {

  namespace {
    Boolean const B;

    std::size_t size_of(char const* name, std::size_t n) {
      return boolean_family(parse_family(name), n).size();
    }
  }  // namespace

  TEST_CASE("family sizes", "[monoid]") {
    std::vector<std::size_t> const catalan{1, 2, 5, 14, 42, 132};
    for (std::size_t n = 1; n <= 6; ++n) {
      REQUIRE(size_of("catalanU", n) == catalan[n - 1]);
      REQUIRE(catalan_number(n) == catalan[n - 1]);
    }
    std::vector<std::size_t> const dc{1, 2, 6, 23};
    std::vector<std::size_t> const g{1, 2, 11, 189};
    std::vector<std::size_t> const og{1, 4, 62, 3769};
    std::vector<std::size_t> const r{1, 4, 64, 4096};
    std::vector<std::size_t> const conv{1, 4, 25, 196};
    for (std::size_t n = 1; n <= 4; ++n) {
      REQUIRE(size_of("doubleCatalan", n) == dc[n - 1]);
      REQUIRE(size_of("gossip", n) == g[n - 1]);
      REQUIRE(size_of("oneWayGossip", n) == og[n - 1]);
      REQUIRE(size_of("reflexiveBool", n) == r[n - 1]);
      REQUIRE(size_of("convexBool", n) == conv[n - 1]);
    }
    REQUIRE(upper_triangular_boolean(3).size() == 64);
    REQUIRE(unitriangular_boolean(4).size() == 64);
  }

  TEST_CASE("family names", "[monoid]") {
    for (auto name : {"catalanU", "doubleCatalan", "gossip", "oneWayGossip",
                      "reflexiveBool", "convexBool", "catalanU_S", "doubleCatalan_S",
                      "gossip_S", "oneWayGossip_S"}) {
      REQUIRE(to_string(parse_family(name)) == name);
    }
    REQUIRE(is_generalized(Family::gossip_s));
    REQUIRE_FALSE(is_generalized(Family::gossip));
    REQUIRE_THROWS_AS(parse_family("catalan"), ParseError);
  }

  TEST_CASE("dimension limits", "[monoid]") {
    REQUIRE_THROWS_AS(boolean_family(Family::gossip, 5), PreconditionError);
    REQUIRE_THROWS_AS(boolean_family(Family::reflexive, 5), PreconditionError);
    REQUIRE_THROWS_AS(boolean_family(Family::catalan_upper, 0), PreconditionError);
  }

  TEST_CASE("generalized families", "[monoid]") {
    MinPlusInterval const s;
    auto const sample = s.default_scalars();
    auto const G      = family(s, Family::gossip_s, 3, sample);
    REQUIRE(G.size() == 220);
    for (auto const& A : G.elements) {
      REQUIRE(is_reflexive(s, A));
    }
    REQUIRE(family(s, Family::catalan_upper_s, 1, sample).size() == 1);
    REQUIRE_THROWS_AS(family(Naturals(), Family::gossip_s, 3, {Natural{2}}),
                      UnsupportedStructure);
  }

  TEST_CASE("closure is deterministic with sound witnesses", "[monoid]") {
    auto const M1 = boolean_family(Family::gossip, 3);
    auto const M2 = boolean_family(Family::gossip, 3);
    REQUIRE(M1.elements == M2.elements);
    REQUIRE(M1.witness_words == M2.witness_words);
    REQUIRE(M1.word_label(0) == "1");
    for (std::uint32_t k = 0; k < M1.size(); ++k) {
      BoolMatrix P = identity(B, 3);
      for (auto g : M1.witness_words[k]) {
        P = multiply(B, P, M1.generators[g]);
      }
      REQUIRE(P == M1.elements[k]);
      REQUIRE(M1.find(P) == k);
    }
    // witness words are shortlex increasing
    for (std::uint32_t k = 1; k < M1.size(); ++k) {
      auto const& a = M1.witness_words[k - 1];
      auto const& b = M1.witness_words[k];
      REQUIRE((a.size() < b.size() || (a.size() == b.size() && a < b)));
    }
  }

  TEST_CASE("index multiplication agrees with matrices", "[monoid]") {
    auto const M     = boolean_family(Family::double_catalan, 4);
    auto const table = multiplication_table(M);
    auto const N     = M.size();
    for (std::uint32_t a = 0; a < N; ++a) {
      for (std::uint32_t b = 0; b < N; ++b) {
        auto const ab = multiply(B, M.elements[a], M.elements[b]);
        REQUIRE(M.elements[table[a * N + b]] == ab);
        REQUIRE(M.multiply(a, b) == table[a * N + b]);
      }
    }
  }

  TEST_CASE("closure cap", "[monoid]") {
    auto const [gens, labels] = family_generators(B, Family::gossip, 4, {B.one()});
    try {
      bfs_closure(B, gens, labels, 50);
      FAIL("expected the cap to be exceeded");
    } catch (ClosureCapExceeded<Boolean> const& e) {
      REQUIRE_FALSE(e.partial.complete);
      REQUIRE(e.partial.size() >= 50);
    }
    REQUIRE_THROWS_AS(bfs_closure(B, gens, labels, 0), PreconditionError);
    std::vector<std::string> const few(gens.size() - 1, "x");
    REQUIRE_THROWS_AS(bfs_closure(B, gens, few, 100), PreconditionError);
  }

  TEST_CASE("monoid_from_elements", "[monoid]") {
    auto const M = monoid_from_elements(B, {one_way_call(B, 2, 1, 2)}, 2);
    REQUIRE(M.size() == 2);
  }

  TEST_CASE("bit encoding", "[monoid]") {
    auto const A = parse_matrix(B, "1 1 0; 0 1 0; 1 0 1");
    REQUIRE(to_bits(A) == ((1u << 0) | (1u << 1) | (1u << 4) | (1u << 6) | (1u << 8)));
    REQUIRE(from_bits(to_bits(A), 3) == A);
  }

  TEST_CASE("brute force identities", "[monoid]") {
    auto const C2 = boolean_family(Family::catalan_upper, 2);
    auto const C3 = boolean_family(Family::catalan_upper, 3);
    REQUIRE(brute_force_identity(Identity::parse("xy=yx"), C2).holds);
    auto const r = brute_force_identity(Identity::parse("xy=yx"), C3);
    REQUIRE_FALSE(r.holds);
    REQUIRE(r.counterexample);
    auto const& x = *r.counterexample;
    REQUIRE(C3.multiply(x[0], x[1]) != C3.multiply(x[1], x[0]));

    auto const U3 = unitriangular_boolean(3);
    REQUIRE(brute_force_identity(Identity::parse("abab=abba"), U3).holds);
    REQUIRE(brute_force_identity(Identity::parse("xx=xxx"), U3).holds);
    REQUIRE_FALSE(brute_force_identity(Identity::parse("x=xx"), U3).holds);

    BruteForceOptions tight;
    tight.budget = 10;
    REQUIRE_THROWS_AS(brute_force_identity(Identity::parse("xyz=zyx"), U3, tight),
                      BudgetExceeded);
    BruteForceOptions sampled;
    sampled.sampled = true;
    sampled.samples = 500;
    auto const s    = brute_force_identity(Identity::parse("xyz=zyx"), U3, sampled);
    REQUIRE(s.sampled);
    REQUIRE_FALSE(s.holds);
  }

  TEST_CASE("structural checks", "[monoid]") {
    auto const G = structural_checks(boolean_family(Family::gossip, 3));
    REQUIRE(G.aperiodic);
    REQUIRE(G.max_index() <= 2);
    REQUIRE(G.j_trivial);
    REQUIRE(G.j_classes == 11);
    auto const R = structural_checks(boolean_family(Family::reflexive, 3));
    REQUIRE(R.aperiodic);
    REQUIRE(R.j_trivial);
    REQUIRE(R.j_classes == 64);
    REQUIRE(structural_checks(boolean_family(Family::one_way_gossip, 3)).max_index() <= 2);
  }

  TEST_CASE("catalan presentation", "[monoid]") {
    for (std::size_t n = 2; n <= 5; ++n) {
      auto const p = check_catalan_presentation(n);
      REQUIRE(p.all_hold());
      REQUIRE(p.closure_size == catalan_number(n));
    }
    REQUIRE_THROWS_AS(check_catalan_presentation(1), PreconditionError);
  }

  TEST_CASE("inclusions", "[monoid]") {
    for (std::size_t n = 1; n <= 4; ++n) {
      REQUIRE(check_inclusions(n).all_contained());
    }
    REQUIRE(check_generalized_inclusions(MinPlusInterval(), 3, MinPlusInterval().default_scalars())
                .all_contained());
  }

  TEST_CASE("format_closure", "[monoid]") {
    auto const text = format_closure(boolean_family(Family::catalan_upper, 2), "catalanU");
    REQUIRE(text.find("1 0; 0 1\t1") != std::string::npos);
    REQUIRE(text.find("1 1; 0 1\tD(1)") != std::string::npos);
  }

}  // namespace semiid
