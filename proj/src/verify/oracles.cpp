#include "semiid/verify/oracles.hpp"

namespace semiid::oracle {

  std::map<Letter, std::size_t> content(Word const& w) {
    std::map<Letter, std::size_t> out;
    for (Letter c : w) {
      ++out[c];
    }
    return out;
  }

  std::size_t beta(Word const& w, Letter s, std::size_t p, std::size_t q) {
    std::size_t count = 0;
    for (std::size_t i = 1; i <= w.size(); ++i) {
      if (p < i && i < q && w[i - 1] == s) {
        ++count;
      }
    }
    return count;
  }

  std::vector<std::vector<std::size_t>> embeddings(Word const& u, Word const& w) {
    std::vector<std::vector<std::size_t>> out;
    std::size_t const                     m = u.size(), L = w.size();
    if (m > L) {
      return out;
    }
    // Walk every m-subset of [L] in lexicographic order.
    std::vector<std::size_t> idx(m);
    for (std::size_t k = 0; k < m; ++k) {
      idx[k] = k + 1;
    }
    while (true) {
      bool match = true;
      for (std::size_t k = 0; k < m && match; ++k) {
        match = w[idx[k] - 1] == u[k];
      }
      if (match) {
        out.push_back(idx);
      }
      std::size_t k = m;
      while (k > 0 && idx[k - 1] == L - m + k) {
        --k;
      }
      if (k == 0) {
        break;
      }
      ++idx[k - 1];
      for (std::size_t r = k; r < m; ++r) {
        idx[r] = idx[r - 1] + 1;
      }
    }
    return out;
  }

  BigInt multiplicity(Word const& u, Word const& w) {
    return BigInt(embeddings(u, w).size());
  }

  std::set<Word> subwords(Word const& w, std::size_t k) {
    std::set<Word> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << w.size()); ++mask) {
      std::string s;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if ((mask >> i) & 1u) {
          s.push_back(w[i]);
        }
      }
      if (s.size() <= k) {
        out.insert(Word(s));
      }
    }
    return out;
  }

  bool simon(Word const& w, Word const& v, std::size_t k) {
    return subwords(w, k) == subwords(v, k);
  }

  FormalPolynomial f(Word const&                     u,
                     std::vector<std::size_t> const& rho,
                     Word const&                     w,
                     std::string const&              alphabet) {
    std::set<VariableId> universe;
    for (Letter c : alphabet) {
      for (auto v : rho) {
        universe.insert(VariableId{c, v});
      }
    }
    FormalPolynomial p(universe);
    for (auto const& alpha : embeddings(u, w)) {
      std::vector<std::size_t> cuts{0};
      cuts.insert(cuts.end(), alpha.begin(), alpha.end());
      cuts.push_back(w.size() + 1);
      Monomial m;
      for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        for (Letter c : alphabet) {
          auto const e = oracle::beta(w, c, cuts[k], cuts[k + 1]);
          if (e > 0) {
            m[VariableId{c, rho[k]}] += e;
          }
        }
      }
      p.add_term(m, 1);
    }
    return p;
  }

  BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) {
      return 0;
    }
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

}  // namespace semiid::oracle
