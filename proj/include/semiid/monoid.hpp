#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semiid/errors.hpp"
#include "semiid/matrix.hpp"
#include "semiid/semirings.hpp"
#include "semiid/word.hpp"

namespace semiid {

  // Word over generator indices.
  using GeneratorWord = std::vector<std::uint32_t>;

  // Submonoid of M_n(S) generated by a finite list. Element 0 is I_n; the
  // rest appear in breadth-first discovery order, so witness_words[k] is the
  // shortlex-least generator word evaluating to elements[k].
  template <Semiring S>
  struct ClosureResult {
    S                                           semiring;
    std::size_t                                 n = 0;
    std::vector<Matrix<S>>                      generators;
    std::vector<std::string>                    generator_labels;
    std::vector<Matrix<S>>                      elements;
    std::vector<GeneratorWord>                  witness_words;
    std::vector<std::vector<std::uint32_t>>     cayley_right;
    std::unordered_map<std::string, std::uint32_t> index;
    bool                                        complete = true;

    explicit ClosureResult(S s) : semiring(std::move(s)) {}

    std::size_t size() const noexcept {
      return elements.size();
    }

    std::optional<std::uint32_t> find(Matrix<S> const& A) const {
      auto it = index.find(format_matrix(semiring, A));
      if (it == index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    bool contains(Matrix<S> const& A) const {
      return find(A).has_value();
    }

    // Index of elements[a] * elements[b], read off the right Cayley graph
    // along the witness word of b.
    std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const {
      for (auto g : witness_words[b]) {
        a = cayley_right[a][g];
      }
      return a;
    }

    std::string word_label(std::uint32_t k) const {
      auto const& w = witness_words[k];
      if (w.empty()) {
        return "1";
      }
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
          out += '*';
        }
        out += generator_labels[w[i]];
      }
      return out;
    }
  };

  template <Semiring S>
  class ClosureCapExceeded : public BudgetExceeded {
   public:
    ClosureCapExceeded(std::string const& what, ClosureResult<S> partial_result)
        : BudgetExceeded(what), partial(std::move(partial_result)) {}

    ClosureResult<S> partial;
  };

  template <Semiring S>
  ClosureResult<S> bfs_closure(S const&                        s,
                               std::vector<Matrix<S>> const&   generators,
                               std::vector<std::string> const& labels,
                               std::size_t                     element_cap,
                               std::size_t                     n = 0) {
    if (element_cap < 1) {
      throw PreconditionError("bfs_closure: element cap must be >= 1");
    }
    if (labels.size() != generators.size()) {
      throw PreconditionError("bfs_closure: one label per generator needed");
    }
    if (!generators.empty()) {
      n = static_cast<std::size_t>(generators.front().rows());
    }
    if (n < 1) {
      throw PreconditionError("bfs_closure: dimension unknown or zero");
    }
    for (auto const& G : generators) {
      if (G.rows() != G.cols() || static_cast<std::size_t>(G.rows()) != n) {
        throw PreconditionError("bfs_closure: generators differ in shape");
      }
      require_members(s, G);
    }

    ClosureResult<S> result(s);
    result.n                = n;
    result.generators       = generators;
    result.generator_labels = labels;

    auto const id = identity(s, n);
    result.elements.push_back(id);
    result.witness_words.emplace_back();
    result.index.emplace(format_matrix(s, id), 0);

    for (std::size_t pos = 0; pos < result.elements.size(); ++pos) {
      result.cayley_right.emplace_back(generators.size(), 0);
      for (std::uint32_t g = 0; g < generators.size(); ++g) {
        Matrix<S> P
            = detail::multiply_unchecked(s, result.elements[pos], generators[g]);
        auto key = format_matrix(s, P);
        auto it  = result.index.find(key);
        if (it == result.index.end()) {
          if (result.elements.size() >= element_cap) {
            result.complete = false;
            throw ClosureCapExceeded<S>(
                "closure exceeded the element cap of "
                    + std::to_string(element_cap),
                std::move(result));
          }
          auto const k = static_cast<std::uint32_t>(result.elements.size());
          it           = result.index.emplace(std::move(key), k).first;
          result.elements.push_back(std::move(P));
          GeneratorWord w = result.witness_words[pos];
          w.push_back(g);
          result.witness_words.push_back(std::move(w));
        }
        result.cayley_right[pos][g] = it->second;
      }
    }
    return result;
  }

  // A finite monoid given by all its elements. Every non-identity element is
  // its own generator, so cayley_right is the full multiplication table.
  template <Semiring S>
  ClosureResult<S> monoid_from_elements(S const&                      s,
                                        std::vector<Matrix<S>> const& elements,
                                        std::size_t                   n) {
    auto const               id = identity(s, n);
    std::vector<Matrix<S>>   gens;
    std::vector<std::string> labels;
    for (auto const& A : elements) {
      if (!(A == id)) {
        gens.push_back(A);
        labels.push_back("[" + format_matrix(s, A) + "]");
      }
    }
    auto M = bfs_closure(s, gens, labels, elements.size() + 1, n);
    if (M.size() != gens.size() + 1) {
      throw PreconditionError("monoid_from_elements: set is not a monoid");
    }
    return M;
  }

  // Row-major table, table[a * size + b] = index of elements[a] * elements[b].
  template <Semiring S>
  std::vector<std::uint32_t> multiplication_table(ClosureResult<S> const& M) {
    auto const                 N = M.size();
    std::vector<std::uint32_t> table(N * N);
    for (std::uint32_t a = 0; a < N; ++a) {
      for (std::uint32_t b = 0; b < N; ++b) {
        table[std::size_t(a) * N + b] = M.multiply(a, b);
      }
    }
    return table;
  }

  ////////////////////////////////////////////////////////////////////////
  // Named families
  ////////////////////////////////////////////////////////////////////////

  enum class Family : std::uint8_t {
    catalan_upper,
    double_catalan,
    gossip,
    one_way_gossip,
    reflexive,
    convex,
    catalan_upper_s,
    double_catalan_s,
    gossip_s,
    one_way_gossip_s
  };

  // catalanU, doubleCatalan, gossip, oneWayGossip, reflexiveBool, convexBool,
  // and the same four with an "_S" suffix.
  Family      parse_family(std::string_view name);
  std::string to_string(Family f);
  bool        is_generalized(Family f);

  // Generator indices for G_n(S) and the one-way analogue: i != j over [n]
  // (default, as in the Boolean families) or i != j over [n - 1].
  enum class IndexRange : std::uint8_t { full, truncated };

  struct FamilyOptions {
    std::size_t element_cap    = 5'000'000;
    std::size_t max_n          = 6;
    std::size_t max_gossip_n   = 4;
    std::size_t max_reflexive_n = 4;
    IndexRange  index_range    = IndexRange::full;
  };

  namespace detail {
    void check_family_dimension(Family f, std::size_t n, FamilyOptions const& opts);

    template <Semiring S>
    std::string scalar_suffix(S const& s, value_t<S> const& v) {
      return v == s.one() ? std::string() : ";" + s.format(v);
    }
  }  // namespace detail

  template <Semiring S>
  std::pair<std::vector<Matrix<S>>, std::vector<std::string>>
  family_generators(S const&                       s,
                    Family                         f,
                    std::size_t                    n,
                    std::vector<value_t<S>> const& scalars,
                    IndexRange                     range = IndexRange::full) {
    std::vector<Matrix<S>>   gens;
    std::vector<std::string> labels;
    auto pair_label = [&](char name, std::size_t i, std::size_t j, auto const& v) {
      return std::string(1, name) + "(" + std::to_string(i) + ","
             + std::to_string(j) + detail::scalar_suffix(s, v) + ")";
    };
    std::size_t const top = (range == IndexRange::full || n == 0) ? n : n - 1;
    for (auto const& v : scalars) {
      switch (f) {
        case Family::catalan_upper:
        case Family::catalan_upper_s:
          for (std::size_t i = 1; i < n; ++i) {
            gens.push_back(one_way_call(s, n, i, i + 1, v));
            labels.push_back(v == s.one() && f == Family::catalan_upper
                                 ? "D(" + std::to_string(i) + ")"
                                 : pair_label('D', i, i + 1, v));
          }
          break;
        case Family::double_catalan:
        case Family::double_catalan_s:
          for (std::size_t i = 1; i < n; ++i) {
            gens.push_back(two_way_call(s, n, i, i + 1, v));
            labels.push_back(v == s.one() && f == Family::double_catalan
                                 ? "E(" + std::to_string(i) + ")"
                                 : pair_label('E', i, i + 1, v));
          }
          break;
        case Family::gossip:
          for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = i + 1; j <= n; ++j) {
              gens.push_back(two_way_call(s, n, i, j, v));
              labels.push_back(pair_label('E', i, j, v));
            }
          }
          break;
        case Family::gossip_s:
          for (std::size_t i = 1; i <= top; ++i) {
            for (std::size_t j = 1; j <= top; ++j) {
              if (i != j) {
                gens.push_back(two_way_call(s, n, i, j, v));
                labels.push_back(pair_label('E', i, j, v));
              }
            }
          }
          break;
        case Family::one_way_gossip:
        case Family::one_way_gossip_s: {
          std::size_t const m = f == Family::one_way_gossip ? n : top;
          for (std::size_t i = 1; i <= m; ++i) {
            for (std::size_t j = 1; j <= m; ++j) {
              if (i != j) {
                gens.push_back(one_way_call(s, n, i, j, v));
                labels.push_back(pair_label('D', i, j, v));
              }
            }
          }
          break;
        }
        case Family::reflexive:
        case Family::convex:
          throw PreconditionError("family_generators: " + to_string(f)
                                  + " is enumerated directly");
      }
    }
    return {gens, labels};
  }

  // s-parametrised family over an interval semiring with a finite scalar
  // sample; the Boolean names are accepted too and use the scalar 1_S.
  template <Semiring S>
  ClosureResult<S> family(S const&                       s,
                          Family                         f,
                          std::size_t                    n,
                          std::vector<value_t<S>> const& scalars,
                          FamilyOptions const&           opts = {}) {
    detail::check_family_dimension(f, n, opts);
    std::vector<value_t<S>> sample = scalars;
    if (is_generalized(f)) {
      require_interval(s);
      if (sample.empty()) {
        throw PreconditionError("family: the scalar sample is empty");
      }
    } else {
      sample = {s.one()};
    }
    auto [gens, labels] = family_generators(s, f, n, sample, opts.index_range);
    return bfs_closure(s, gens, labels, opts.element_cap, n);
  }

  // Boolean families, including reflexiveBool and convexBool. The latter two
  // are enumerated directly and generated by their irreducible elements; the
  // closure size is confirmed against the enumeration.
  ClosureResult<Boolean> boolean_family(Family               f,
                                        std::size_t          n,
                                        FamilyOptions const& opts = {});

  // All of UT_n(B) and U_n(B).
  ClosureResult<Boolean> upper_triangular_boolean(std::size_t n);
  ClosureResult<Boolean> unitriangular_boolean(std::size_t n);

  // [n x n Boolean matrix] <-> bitmask with bit i * n + j for entry (i, j).
  std::uint64_t to_bits(BoolMatrix const& A);
  BoolMatrix    from_bits(std::uint64_t bits, std::size_t n);

  ////////////////////////////////////////////////////////////////////////
  // Catalan presentation and inclusions
  ////////////////////////////////////////////////////////////////////////

  struct RelationCheck {
    std::string lhs;
    std::string rhs;
    bool        holds = false;
  };

  struct PresentationCheck {
    std::size_t                n = 0;
    std::vector<RelationCheck> relations;
    std::size_t                closure_size   = 0;
    std::uint64_t              catalan_number = 0;

    bool all_hold() const {
      for (auto const& r : relations) {
        if (!r.holds) {
          return false;
        }
      }
      return closure_size == catalan_number;
    }
  };

  std::uint64_t     catalan_number(std::size_t n);
  PresentationCheck check_catalan_presentation(std::size_t n);

  struct InclusionCheck {
    std::string sub;
    std::string super;
    std::size_t sub_size   = 0;
    std::size_t super_size = 0;
    bool        contained  = false;
    bool        capped     = false;
  };

  struct InclusionReport {
    std::size_t                 n = 0;
    std::vector<InclusionCheck> checks;

    bool all_contained() const {
      for (auto const& c : checks) {
        if (!c.contained) {
          return false;
        }
      }
      return true;
    }
  };

  // DC_n in G_n in one-way G_n in R_n, elementwise.
  InclusionReport check_inclusions(std::size_t n, FamilyOptions const& opts = {});

  // Every element of each s-parametrised family is reflexive, and contains the
  // Boolean family read through 0 -> 0_S, 1 -> 1_S.
  template <Semiring S>
  InclusionReport check_generalized_inclusions(S const&                       s,
                                               std::size_t                    n,
                                               std::vector<value_t<S>> const& scalars,
                                               FamilyOptions const& opts = {}) {
    InclusionReport report;
    report.n = n;
    std::pair<Family, Family> const pairs[]
        = {{Family::catalan_upper, Family::catalan_upper_s},
           {Family::double_catalan, Family::double_catalan_s},
           {Family::gossip, Family::gossip_s},
           {Family::one_way_gossip, Family::one_way_gossip_s}};
    for (auto const& [boolean_name, generalized_name] : pairs) {
      auto const big = family(s, generalized_name, n, scalars, opts);
      InclusionCheck reflexive{to_string(generalized_name),
                               "R_n(" + s.name() + ")",
                               big.size(),
                               0,
                               true,
                               false};
      for (auto const& A : big.elements) {
        reflexive.contained = reflexive.contained && is_reflexive(s, A);
      }
      report.checks.push_back(reflexive);

      auto const     small = boolean_family(boolean_name, n, opts);
      InclusionCheck embedded{to_string(boolean_name),
                              to_string(generalized_name),
                              small.size(),
                              big.size(),
                              true,
                              false};
      for (auto const& B : small.elements) {
        Matrix<S> A = zeros(s, n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (B(i, j)) {
              A(i, j) = s.one();
            }
          }
        }
        embedded.contained = embedded.contained && big.contains(A);
      }
      report.checks.push_back(embedded);
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Brute-force identity testing
  ////////////////////////////////////////////////////////////////////////

  struct BruteForceOptions {
    std::uint64_t budget  = 10'000'000;
    bool          sampled = false;
    std::uint64_t samples = 10'000;
    std::uint64_t seed    = 0;
  };

  struct BruteForceResult {
    bool holds = true;
    // Element index per letter of the identity's alphabet, in letter order.
    std::optional<std::vector<std::uint32_t>> counterexample;
    std::uint64_t                             assignments_checked = 0;
    bool                                      sampled             = false;
  };

  namespace detail {
    // Evaluates an identity over a finite monoid given by a product function.
    template <typename Mul>
    BruteForceResult brute_force(Identity const&          id,
                                 std::size_t              size,
                                 Mul const&               mul,
                                 BruteForceOptions const& opts) {
      auto const  sigma = alphabet(id);
      std::size_t pos[26];
      for (std::size_t k = 0; k < sigma.size(); ++k) {
        pos[sigma[k] - 'a'] = k;
      }
      std::vector<std::uint32_t> lhs, rhs;
      for (Letter c : id.lhs) {
        lhs.push_back(static_cast<std::uint32_t>(pos[c - 'a']));
      }
      for (Letter c : id.rhs) {
        rhs.push_back(static_cast<std::uint32_t>(pos[c - 'a']));
      }
      std::vector<std::uint32_t> x(sigma.size(), 0);
      auto eval = [&](std::vector<std::uint32_t> const& w) {
        std::uint32_t acc = 0;
        for (auto k : w) {
          acc = mul(acc, x[k]);
        }
        return acc;
      };

      BruteForceResult result;
      result.sampled = opts.sampled;
      if (opts.sampled) {
        Rng rng(opts.seed);
        for (std::uint64_t t = 0; t < opts.samples; ++t) {
          for (auto& xi : x) {
            xi = static_cast<std::uint32_t>(draw_below(rng, size));
          }
          ++result.assignments_checked;
          if (eval(lhs) != eval(rhs)) {
            result.holds          = false;
            result.counterexample = x;
            return result;
          }
        }
        return result;
      }

      std::uint64_t total = 1;
      for (std::size_t k = 0; k < sigma.size(); ++k) {
        if (total > opts.budget / std::max<std::size_t>(size, 1)) {
          throw BudgetExceeded("brute_force_identity: more than "
                               + std::to_string(opts.budget)
                               + " assignments; use sample mode");
        }
        total *= size;
      }
      for (std::uint64_t t = 0; t < total; ++t) {
        ++result.assignments_checked;
        if (eval(lhs) != eval(rhs)) {
          result.holds          = false;
          result.counterexample = x;
          return result;
        }
        for (std::size_t k = x.size(); k-- > 0;) {
          if (++x[k] < size) {
            break;
          }
          x[k] = 0;
        }
      }
      return result;
    }
  }  // namespace detail

  // Every assignment of letters to elements, the first letter varying
  // slowest; the first counterexample found is returned.
  template <Semiring S>
  BruteForceResult brute_force_identity(Identity const&          id,
                                        ClosureResult<S> const&  M,
                                        BruteForceOptions const& opts = {}) {
    auto const N = M.size();
    if (N <= 4096) {
      auto const table = multiplication_table(M);
      return detail::brute_force(
          id,
          N,
          [&](std::uint32_t a, std::uint32_t b) { return table[std::size_t(a) * N + b]; },
          opts);
    }
    return detail::brute_force(
        id, N, [&](std::uint32_t a, std::uint32_t b) { return M.multiply(a, b); }, opts);
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  struct StructuralReport {
    std::vector<std::uint32_t> idempotents;
    // Least m <= bound with A^{m+1} = A^m, per element.
    std::vector<std::optional<std::size_t>> aperiodicity_index;
    std::size_t                             bound      = 0;
    bool                                    aperiodic  = true;
    bool                                    j_trivial  = true;
    std::size_t                             j_classes  = 0;

    std::size_t max_index() const {
      std::size_t m = 0;
      for (auto const& k : aperiodicity_index) {
        if (k && *k > m) {
          m = *k;
        }
      }
      return m;
    }
  };

  namespace detail {
    // Number of strongly connected components of a directed graph, and
    // whether all are singletons.
    std::pair<std::size_t, bool> strong_components(
        std::size_t                                             vertices,
        std::vector<std::pair<std::uint32_t, std::uint32_t>> const& edges);
  }

  // Aperiodicity up to bound (default n) and J-triviality via mutual
  // reachability in the two-sided Cayley graph.
  template <Semiring S>
  StructuralReport structural_checks(ClosureResult<S> const& M,
                                     std::size_t             bound = 0) {
    auto const&      s = M.semiring;
    StructuralReport report;
    report.bound = bound == 0 ? M.n : bound;
    auto const N = M.size();
    for (std::uint32_t a = 0; a < N; ++a) {
      if (M.multiply(a, a) == a) {
        report.idempotents.push_back(a);
      }
      std::optional<std::size_t> index;
      Matrix<S>                  P = identity(s, M.n);
      for (std::size_t m = 0; m <= report.bound; ++m) {
        Matrix<S> Q = detail::multiply_unchecked(s, P, M.elements[a]);
        if (Q == P) {
          index = m;
          break;
        }
        P = std::move(Q);
      }
      report.aperiodic = report.aperiodic && index.has_value();
      report.aperiodicity_index.push_back(index);
    }

    std::vector<std::uint32_t> gen_index;
    for (auto const& G : M.generators) {
      auto k = M.find(G);
      if (!k) {
        throw InconsistencyError("structural_checks: generator not in closure");
      }
      gen_index.push_back(*k);
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t a = 0; a < N; ++a) {
      for (std::uint32_t g = 0; g < gen_index.size(); ++g) {
        edges.emplace_back(a, M.cayley_right[a][g]);
        edges.emplace_back(a, M.multiply(gen_index[g], a));
      }
    }
    auto const [classes, trivial] = detail::strong_components(N, edges);
    report.j_classes              = classes;
    report.j_trivial              = trivial;
    return report;
  }

  // Header then one "<matrix text>\t<witness word>" line per element.
  template <Semiring S>
  std::string format_closure(ClosureResult<S> const& M, std::string const& family_name) {
    std::string out = "family: " + family_name + "\n";
    out += "n: " + std::to_string(M.n) + "\n";
    out += "semiring: " + M.semiring.name() + "\n";
    out += "count: " + std::to_string(M.size()) + "\n";
    for (std::uint32_t k = 0; k < M.size(); ++k) {
      out += format_matrix(M.semiring, M.elements[k]) + "\t" + M.word_label(k) + "\n";
    }
    return out;
  }

}  // namespace semiid
