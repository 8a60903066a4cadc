#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "semiid/numeric.hpp"

namespace semiid {

  using Letter = char;

  // A finite word over the letters a-z; the empty word is the identity of the
  // free monoid. Positions in the free functions below are 1-based.
  class Word {
   public:
    Word() = default;
    explicit Word(std::string letters);

    static Word parse(std::string_view text) {
      return Word(std::string(text));
    }

    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    // 0-based.
    Letter operator[](std::size_t i) const noexcept {
      return _letters[i];
    }
    std::string const& str() const noexcept {
      return _letters;
    }
    auto begin() const noexcept {
      return _letters.begin();
    }
    auto end() const noexcept {
      return _letters.end();
    }

    Word operator+(Word const& other) const {
      return Word(_letters + other._letters, trusted{});
    }
    Word operator+(Letter c) const {
      return Word(_letters + c, trusted{});
    }
    Word prefix(std::size_t len) const {
      return Word(_letters.substr(0, len), trusted{});
    }

    bool operator==(Word const&) const = default;
    // Shortlex: shorter words first, then lexicographic.
    friend std::strong_ordering operator<=>(Word const& a, Word const& b) {
      if (a.size() != b.size()) {
        return a.size() <=> b.size();
      }
      return a._letters.compare(b._letters) <=> 0;
    }

   private:
    struct trusted {};
    Word(std::string letters, trusted) : _letters(std::move(letters)) {}

    std::string _letters;
  };

  // A semigroup identity lhs = rhs; both sides non-empty.
  struct Identity {
    Word lhs;
    Word rhs;

    Identity() = default;
    Identity(Word l, Word r);

    // "<word>=<word>" over [a-z].
    static Identity parse(std::string_view text);

    std::string str() const {
      return lhs.str() + "=" + rhs.str();
    }
    bool operator==(Identity const&) const = default;
  };

  // Sorted distinct letters.
  std::string alphabet(Word const& w);
  std::string alphabet(Identity const& id);
  std::string merge_alphabets(std::string_view a, std::string_view b);

  std::map<Letter, std::size_t> content(Word const& w);

  // Number of i with p < i < q and w_i = s; requires 0 <= p < q <= |w| + 1.
  std::size_t beta(Word const& w, Letter s, std::size_t p, std::size_t q);

  // Number of strictly increasing index tuples embedding u into w.
  BigInt scattered_multiplicity(Word const& u, Word const& w);

  // Distinct non-empty scattered subwords of w of length at most k.
  std::set<Word> subword_set(Word const& w, std::size_t k);

  bool simon_equivalent(Word const& w, Word const& v, std::size_t k);

  bool is_balanced(Identity const& id);

  // All words over the alphabet with min_len <= length <= max_len, shortlex.
  std::vector<Word> words_up_to(std::string_view alphabet,
                                std::size_t      max_len,
                                std::size_t      min_len = 0);

}  // namespace semiid
