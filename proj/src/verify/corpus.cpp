#include "semiid/verify/corpus.hpp"

namespace semiid::corpus {

  namespace {
    std::vector<Identity> pairs_xy(std::size_t max_len, bool balanced_only) {
      auto const            words = words_up_to("xy", max_len, 1);
      std::vector<Identity> out;
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
          Identity id(words[i], words[j]);
          if (!balanced_only || is_balanced(id)) {
            out.push_back(std::move(id));
          }
        }
      }
      return out;
    }
  }  // namespace

  std::vector<Identity> balanced_xy(std::size_t max_len) {
    return pairs_xy(max_len, true);
  }

  std::vector<Identity> all_pairs_xy(std::size_t max_len) {
    return pairs_xy(max_len, false);
  }

  std::vector<Identity> random_identities(std::size_t      count,
                                          std::uint64_t    seed,
                                          std::string_view letters,
                                          std::size_t      max_len) {
    Rng  rng(seed);
    auto side = [&] {
      std::string s(1 + draw_below(rng, max_len), 'a');
      for (auto& c : s) {
        c = letters[draw_below(rng, letters.size())];
      }
      return Word(s);
    };
    std::vector<Identity> out;
    out.reserve(count);
    while (out.size() < count) {
      auto l = side();
      auto r = side();
      out.emplace_back(std::move(l), std::move(r));
    }
    return out;
  }

  std::vector<Identity> standard() {
    auto out  = balanced_xy();
    auto rand = random_identities();
    out.insert(out.end(), rand.begin(), rand.end());
    return out;
  }

}  // namespace semiid::corpus
