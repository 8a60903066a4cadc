#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "semiid/numeric.hpp"
#include "semiid/polynomial.hpp"
#include "semiid/word.hpp"

// Slow, direct enumerations used to cross-check the dynamic programmes and
// criteria. Nothing here calls the routine it is meant to check.

namespace semiid::oracle {

  std::map<Letter, std::size_t> content(Word const& w);

  std::size_t beta(Word const& w, Letter s, std::size_t p, std::size_t q);

  // Strictly increasing position tuples (1-based) at which u occurs in w.
  std::vector<std::vector<std::size_t>> embeddings(Word const& u, Word const& w);

  BigInt multiplicity(Word const& u, Word const& w);

  // Every subset of positions read off, lengths 1..k.
  std::set<Word> subwords(Word const& w, std::size_t k);

  bool simon(Word const& w, Word const& v, std::size_t k);

  // f_{u,rho}^w term by term from the explicit list of embeddings.
  FormalPolynomial f(Word const&                     u,
                     std::vector<std::size_t> const& rho,
                     Word const&                     w,
                     std::string const&              alphabet);

  BigInt binomial(std::size_t n, std::size_t k);

}  // namespace semiid::oracle
