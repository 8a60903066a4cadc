#include "semiid/word.hpp"

#include <algorithm>
#include <unordered_map>

#include "semiid/errors.hpp"

namespace semiid {

  Word::Word(std::string letters) : _letters(std::move(letters)) {
    for (char c : _letters) {
      if (c < 'a' || c > 'z') {
        throw ParseError("word '" + _letters
                         + "' contains a letter outside a-z");
      }
    }
  }

  Identity::Identity(Word l, Word r) : lhs(std::move(l)), rhs(std::move(r)) {
    if (lhs.empty() || rhs.empty()) {
      throw ParseError("identity sides must be non-empty");
    }
  }

  Identity Identity::parse(std::string_view text) {
    auto const eq = text.find('=');
    if (eq == std::string_view::npos || text.find('=', eq + 1) != text.npos) {
      throw ParseError("malformed identity '" + std::string(text)
                       + "': expected <word>=<word>");
    }
    auto const l = text.substr(0, eq);
    auto const r = text.substr(eq + 1);
    if (l.empty() || r.empty()) {
      throw ParseError("malformed identity '" + std::string(text)
                       + "': empty side");
    }
    return Identity(Word::parse(l), Word::parse(r));
  }

  std::string merge_alphabets(std::string_view a, std::string_view b) {
    std::string out(a);
    out.append(b);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::string alphabet(Word const& w) {
    return merge_alphabets(w.str(), "");
  }

  std::string alphabet(Identity const& id) {
    return merge_alphabets(id.lhs.str(), id.rhs.str());
  }

  std::map<Letter, std::size_t> content(Word const& w) {
    std::map<Letter, std::size_t> out;
    for (Letter c : w) {
      ++out[c];
    }
    return out;
  }

  std::size_t beta(Word const& w, Letter s, std::size_t p, std::size_t q) {
    if (!(p < q && q <= w.size() + 1)) {
      throw PreconditionError("beta: need 0 <= p < q <= |w| + 1");
    }
    std::size_t count = 0;
    for (std::size_t i = p + 1; i < q; ++i) {
      count += (w[i - 1] == s);
    }
    return count;
  }

  BigInt scattered_multiplicity(Word const& u, Word const& w) {
    if (u.empty()) {
      throw PreconditionError("scattered_multiplicity: u must be non-empty");
    }
    // ways[k] = number of embeddings of u_1..u_k into the prefix read so far.
    std::vector<BigInt> ways(u.size() + 1, BigInt(0));
    ways[0] = 1;
    for (Letter c : w) {
      for (std::size_t k = u.size(); k >= 1; --k) {
        if (u[k - 1] == c) {
          ways[k] += ways[k - 1];
        }
      }
    }
    return ways[u.size()];
  }

  std::set<Word> subword_set(Word const& w, std::size_t k) {
    if (k == 0) {
      throw PreconditionError("subword_set: k must be positive");
    }
    // Each layer maps a subword to the end of its leftmost embedding; every
    // extension u.c embeds leftmost at the first c after that position.
    std::set<Word>                       out;
    std::unordered_map<std::string, std::size_t> layer{{"", 0}};
    for (std::size_t len = 1; len <= k && !layer.empty(); ++len) {
      std::unordered_map<std::string, std::size_t> next;
      for (auto const& [prefix, end] : layer) {
        for (std::size_t i = end; i < w.size(); ++i) {
          std::string ext = prefix + w[i];
          next.try_emplace(std::move(ext), i + 1);
        }
      }
      for (auto& [word, end] : next) {
        out.insert(Word::parse(word));
      }
      layer = std::move(next);
    }
    return out;
  }

  bool simon_equivalent(Word const& w, Word const& v, std::size_t k) {
    return subword_set(w, k) == subword_set(v, k);
  }

  bool is_balanced(Identity const& id) {
    return content(id.lhs) == content(id.rhs);
  }

  std::vector<Word> words_up_to(std::string_view alphabet,
                                std::size_t      max_len,
                                std::size_t      min_len) {
    std::vector<Word> out;
    std::vector<Word> layer{Word()};
    for (std::size_t len = 0; len <= max_len; ++len) {
      if (len >= min_len) {
        out.insert(out.end(), layer.begin(), layer.end());
      }
      if (len == max_len) {
        break;
      }
      std::vector<Word> next;
      next.reserve(layer.size() * alphabet.size());
      for (auto const& w : layer) {
        for (char c : alphabet) {
          next.push_back(w + c);
        }
      }
      layer = std::move(next);
    }
    return out;
  }

}  // namespace semiid
