#include "test_support.hpp"

#include "semiid/verify/oracles.hpp"
#include "semiid/word.hpp"

namespace semiid {

  namespace {
    std::set<Word> words(std::initializer_list<char const*> list) {
      std::set<Word> out;
      for (auto w : list) {
        out.insert(Word(w));
      }
      return out;
    }
  }  // namespace

  TEST_CASE("words and identities parse", "[word]") {
    REQUIRE(Word::parse("abc").size() == 3);
    REQUIRE(Word().empty());
    REQUIRE_THROWS_AS(Word::parse("aB"), ParseError);
    auto const id = Identity::parse("xy=yx");
    REQUIRE(id.lhs == Word("xy"));
    REQUIRE(id.rhs == Word("yx"));
    REQUIRE(id.str() == "xy=yx");
    REQUIRE_THROWS_AS(Identity::parse("=x"), ParseError);
    REQUIRE_THROWS_AS(Identity::parse("x="), ParseError);
    REQUIRE_THROWS_AS(Identity::parse("xy"), ParseError);
    REQUIRE_THROWS_AS(Identity::parse("x=y=z"), ParseError);
  }

  TEST_CASE("shortlex order", "[word]") {
    REQUIRE(Word("b") < Word("aa"));
    REQUIRE(Word("ab") < Word("ba"));
    REQUIRE(Word() < Word("a"));
    auto const all = words_up_to("ab", 2);
    REQUIRE(all.size() == 7);
    REQUIRE(all.front() == Word());
    REQUIRE(all.back() == Word("bb"));
    REQUIRE(std::is_sorted(all.begin(), all.end()));
  }

  TEST_CASE("content", "[word]") {
    REQUIRE(content(Word("abab")) == std::map<Letter, std::size_t>{{'a', 2}, {'b', 2}});
    REQUIRE(content(Word("")).empty());
    REQUIRE(content(Word("aab")) == std::map<Letter, std::size_t>{{'a', 2}, {'b', 1}});
  }

  TEST_CASE("beta", "[word]") {
    Word const w("abab");
    REQUIRE(beta(w, 'a', 0, 5) == 2);
    // positions 2..3 hold b, a
    REQUIRE(beta(w, 'b', 1, 4) == 1);
    REQUIRE(oracle::beta(w, 'b', 1, 4) == 1);
    for (std::size_t p = 0; p <= 4; ++p) {
      REQUIRE(beta(w, 'a', p, p + 1) == 0);
    }
    REQUIRE_THROWS_AS(beta(w, 'a', 3, 3), PreconditionError);
    REQUIRE_THROWS_AS(beta(w, 'a', 0, 6), PreconditionError);
  }

  TEST_CASE("scattered_multiplicity", "[word]") {
    REQUIRE(scattered_multiplicity(Word("ab"), Word("abab")) == 3);
    REQUIRE(oracle::multiplicity(Word("ab"), Word("abab")) == 3);
    REQUIRE(scattered_multiplicity(Word("abab"), Word("abab")) == 1);
    REQUIRE(scattered_multiplicity(Word("ab"), Word("xyyx")) == 0);
    REQUIRE_THROWS_AS(scattered_multiplicity(Word(), Word("ab")), PreconditionError);
    // C(40, 20) = 137846528820 embeddings of a^20 in a^40
    REQUIRE(scattered_multiplicity(Word(std::string(20, 'a')), Word(std::string(40, 'a')))
            == BigInt("137846528820"));
  }

  TEST_CASE("subword_set", "[word]") {
    auto const expected = words({"a", "b", "aa", "ab", "ba", "bb"});
    REQUIRE(subword_set(Word("abab"), 2) == expected);
    REQUIRE(oracle::subwords(Word("abab"), 2) == expected);
    REQUIRE(subword_set(Word("a"), 3) == words({"a"}));
    REQUIRE(subword_set(Word("abba"), 2) == expected);
    REQUIRE(oracle::subwords(Word("abba"), 2) == expected);
    REQUIRE_THROWS_AS(subword_set(Word("ab"), 0), PreconditionError);
  }

  TEST_CASE("simon_equivalent", "[word]") {
    REQUIRE(simon_equivalent(Word("abab"), Word("abba"), 2));
    REQUIRE_FALSE(simon_equivalent(Word("abab"), Word("abba"), 3));
    REQUIRE(oracle::simon(Word("abab"), Word("abba"), 2));
    REQUIRE_FALSE(oracle::simon(Word("abab"), Word("abba"), 3));
    REQUIRE(simon_equivalent(Word("abc"), Word("abc"), 5));
  }

  TEST_CASE("is_balanced", "[word]") {
    REQUIRE(is_balanced(Identity::parse("xy=yx")));
    REQUIRE_FALSE(is_balanced(Identity::parse("x=xx")));
    REQUIRE(is_balanced(Identity::parse("abab=abba")));
  }

  TEST_CASE("alphabet", "[word]") {
    REQUIRE(alphabet(Identity::parse("xzx=zy")) == "xyz");
    REQUIRE(merge_alphabets("ac", "bc") == "abc");
  }

}  // namespace semiid
