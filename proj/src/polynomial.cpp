#include "semiid/polynomial.hpp"

namespace semiid {

  Monomial operator*(Monomial const& a, Monomial const& b) {
    Monomial out = a;
    for (auto const& [var, e] : b) {
      out[var] += e;
    }
    return out;
  }

  void FormalPolynomial::add_term(Monomial const& m, BigInt const& coefficient) {
    if (coefficient < 0) {
      throw PreconditionError("formal polynomial coefficients are natural");
    }
    if (coefficient == 0) {
      return;
    }
    for (auto const& [var, e] : m) {
      if (e == 0) {
        throw PreconditionError("monomial exponents must be positive");
      }
      _universe.insert(var);
    }
    _terms[m] += coefficient;
  }

  FormalPolynomial FormalPolynomial::reduced(Monogenic const& type) const {
    FormalPolynomial out(_universe);
    for (auto const& [m, c] : _terms) {
      out.add_term(m, type.reduce(c));
    }
    return out;
  }

  FormalPolynomial FormalPolynomial::relabeled(
      std::map<std::size_t, std::size_t> const& vertex_map) const {
    auto rename = [&](VariableId v) {
      auto it = vertex_map.find(v.vertex);
      if (it != vertex_map.end()) {
        v.vertex = it->second;
      }
      return v;
    };
    std::set<VariableId> universe;
    for (auto const& v : _universe) {
      universe.insert(rename(v));
    }
    FormalPolynomial out(std::move(universe));
    for (auto const& [m, c] : _terms) {
      Monomial renamed;
      for (auto const& [var, e] : m) {
        renamed[rename(var)] += e;
      }
      out.add_term(renamed, c);
    }
    return out;
  }

  std::string FormalPolynomial::str() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& [m, c] : _terms) {
      if (!out.empty()) {
        out += " + ";
      }
      std::string term;
      if (c != 1 || m.empty()) {
        term = c.str();
      }
      for (auto const& [var, e] : m) {
        if (!term.empty()) {
          term += "*";
        }
        term += var.str();
        if (e != 1) {
          term += "^" + std::to_string(e);
        }
      }
      out += term;
    }
    return out;
  }

  namespace {
    // prod_s x(s, vertex)^{beta_s^w(p, q)}.
    Monomial gap_monomial(Word const& w,
                          std::size_t p,
                          std::size_t q,
                          std::size_t vertex) {
      Monomial m;
      for (std::size_t i = p + 1; i < q; ++i) {
        ++m[VariableId{w[i - 1], vertex}];
      }
      return m;
    }

    using Partial = std::map<Monomial, BigInt>;
  }  // namespace

  FormalPolynomial build_f(Word const&                     u,
                           std::vector<std::size_t> const& rho,
                           Word const&                     w,
                           std::size_t                     n,
                           std::string const&              alphabet_in) {
    if (u.size() + 1 > n) {
      throw PreconditionError("build_f: need |u| <= n - 1");
    }
    if (rho.size() != u.size() + 1) {
      throw PreconditionError("build_f: path length must be |u| + 1");
    }
    for (std::size_t k = 0; k < rho.size(); ++k) {
      if (rho[k] < 1 || rho[k] > n || (k > 0 && rho[k] <= rho[k - 1])) {
        throw PreconditionError(
            "build_f: path must be strictly increasing in [n]");
      }
    }
    auto const letters = merge_alphabets(
        alphabet_in.empty() ? merge_alphabets(u.str(), w.str()) : alphabet_in,
        "");
    std::set<VariableId> universe;
    for (char s : letters) {
      for (auto v : rho) {
        universe.insert(VariableId{s, v});
      }
    }
    for (char s : merge_alphabets(u.str(), w.str())) {
      if (letters.find(s) == std::string::npos) {
        throw PreconditionError("build_f: alphabet misses a letter of u or w");
      }
    }

    // states[p] = sum over partial embeddings ending at alpha_k = p.
    std::map<std::size_t, Partial> states{{0, Partial{{Monomial{}, 1}}}};
    for (std::size_t k = 0; k < u.size(); ++k) {
      std::map<std::size_t, Partial> next;
      for (auto const& [p, partial] : states) {
        for (std::size_t q = p + 1; q <= w.size(); ++q) {
          if (w[q - 1] != u[k]) {
            continue;
          }
          auto const gap    = gap_monomial(w, p, q, rho[k]);
          auto&      target = next[q];
          for (auto const& [m, c] : partial) {
            target[m * gap] += c;
          }
        }
      }
      states = std::move(next);
    }
    FormalPolynomial out(std::move(universe));
    for (auto const& [p, partial] : states) {
      auto const gap = gap_monomial(w, p, w.size() + 1, rho.back());
      for (auto const& [m, c] : partial) {
        out.add_term(m * gap, c);
      }
    }
    return out;
  }

  FormalPolynomial build_f_canonical(Word const&        u,
                                     Word const&        w,
                                     std::string const& alphabet) {
    std::vector<std::size_t> rho(u.size() + 1);
    for (std::size_t k = 0; k < rho.size(); ++k) {
      rho[k] = k + 1;
    }
    return build_f(u, rho, w, u.size() + 1, alphabet);
  }

}  // namespace semiid
