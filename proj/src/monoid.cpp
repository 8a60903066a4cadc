#include "semiid/monoid.hpp"

#include <bit>
#include <unordered_set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

namespace semiid {

  namespace {
    struct FamilyName {
      Family           family;
      std::string_view name;
    };

    constexpr FamilyName family_names[] = {
        {Family::catalan_upper, "catalanU"},
        {Family::double_catalan, "doubleCatalan"},
        {Family::gossip, "gossip"},
        {Family::one_way_gossip, "oneWayGossip"},
        {Family::reflexive, "reflexiveBool"},
        {Family::convex, "convexBool"},
        {Family::catalan_upper_s, "catalanU_S"},
        {Family::double_catalan_s, "doubleCatalan_S"},
        {Family::gossip_s, "gossip_S"},
        {Family::one_way_gossip_s, "oneWayGossip_S"},
    };
  }  // namespace

  Family parse_family(std::string_view name) {
    for (auto const& f : family_names) {
      if (f.name == name) {
        return f.family;
      }
    }
    throw ParseError("unknown family '" + std::string(name) + "'");
  }

  std::string to_string(Family f) {
    for (auto const& x : family_names) {
      if (x.family == f) {
        return std::string(x.name);
      }
    }
    return "?";
  }

  bool is_generalized(Family f) {
    return f == Family::catalan_upper_s || f == Family::double_catalan_s
           || f == Family::gossip_s || f == Family::one_way_gossip_s;
  }

  void detail::check_family_dimension(Family               f,
                                      std::size_t          n,
                                      FamilyOptions const& opts) {
    std::size_t limit = std::min(opts.max_n, max_dimension);
    switch (f) {
      case Family::gossip:
      case Family::one_way_gossip:
      case Family::gossip_s:
      case Family::one_way_gossip_s:
        limit = std::min(limit, opts.max_gossip_n);
        break;
      case Family::reflexive:
      case Family::convex:
        limit = std::min(limit, opts.max_reflexive_n);
        break;
      default:
        break;
    }
    if (n < 1 || n > limit) {
      throw PreconditionError(to_string(f) + ": n must lie in [1, "
                              + std::to_string(limit) + "], got "
                              + std::to_string(n));
    }
  }

  std::uint64_t to_bits(BoolMatrix const& A) {
    auto const    n    = static_cast<std::size_t>(A.rows());
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (A(i, j)) {
          bits |= std::uint64_t(1) << (i * n + j);
        }
      }
    }
    return bits;
  }

  BoolMatrix from_bits(std::uint64_t bits, std::size_t n) {
    BoolMatrix A(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        A(i, j) = (bits >> (i * n + j)) & 1u;
      }
    }
    return A;
  }

  namespace {
    std::uint64_t bits_multiply(std::uint64_t a, std::uint64_t b, std::size_t n) {
      std::uint64_t const row = (std::uint64_t(1) << n) - 1;
      std::uint64_t       c   = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t r = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if ((a >> (i * n + k)) & 1u) {
            r |= (b >> (k * n)) & row;
          }
        }
        c |= r << (i * n);
      }
      return c;
    }

    std::uint64_t diagonal_bits(std::size_t n) {
      std::uint64_t d = 0;
      for (std::size_t i = 0; i < n; ++i) {
        d |= std::uint64_t(1) << (i * n + i);
      }
      return d;
    }

    // Reflexive Boolean matrices, optionally only the convex ones, in order
    // of increasing number of ones and then increasing bitmask.
    std::vector<std::uint64_t> enumerate_reflexive(std::size_t n, bool convex_only) {
      std::uint64_t const diag = diagonal_bits(n);
      std::vector<std::size_t> off;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j) {
            off.push_back(i * n + j);
          }
        }
      }
      std::vector<std::uint64_t> out;
      for (std::uint64_t t = 0; t < (std::uint64_t(1) << off.size()); ++t) {
        std::uint64_t bits = diag;
        for (std::size_t k = 0; k < off.size(); ++k) {
          if ((t >> k) & 1u) {
            bits |= std::uint64_t(1) << off[k];
          }
        }
        if (!convex_only || is_convex(from_bits(bits, n))) {
          out.push_back(bits);
        }
      }
      std::stable_sort(out.begin(), out.end(), [](auto a, auto b) {
        auto pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
      });
      return out;
    }

    // Elements not expressible as B * C with B, C members different from I
    // and from the product. In these J-trivial monoids B, C <= BC, so only
    // submasks need trying.
    std::vector<std::uint64_t> irreducibles(std::vector<std::uint64_t> const& members,
                                            std::size_t                       n) {
      std::uint64_t const                     diag = diagonal_bits(n);
      std::unordered_set<std::uint64_t> const in(members.begin(), members.end());
      std::vector<std::uint64_t>              out;
      for (auto A : members) {
        if (A == diag) {
          continue;
        }
        std::uint64_t const off       = A & ~diag;
        bool                reducible = false;
        for (std::uint64_t b = (off - 1) & off; b != 0 && !reducible;
             b               = (b - 1) & off) {
          std::uint64_t const B = b | diag;
          if (!in.count(B)) {
            continue;
          }
          for (std::uint64_t c = (off - 1) & off; c != 0; c = (c - 1) & off) {
            std::uint64_t const C = c | diag;
            if (in.count(C) && bits_multiply(B, C, n) == A) {
              reducible = true;
              break;
            }
          }
        }
        if (!reducible) {
          out.push_back(A);
        }
      }
      return out;
    }

    ClosureResult<Boolean> enumerated_family(Family               f,
                                             std::size_t          n,
                                             FamilyOptions const& opts) {
      Boolean const s;
      auto const    members = enumerate_reflexive(n, f == Family::convex);
      auto const    gens    = irreducibles(members, n);
      std::vector<BoolMatrix>  matrices;
      std::vector<std::string> labels;
      for (auto g : gens) {
        matrices.push_back(from_bits(g, n));
        labels.push_back("[" + format_matrix(s, matrices.back()) + "]");
      }
      auto M = bfs_closure(s, matrices, labels, opts.element_cap, n);
      if (M.size() != members.size()) {
        throw InconsistencyError(to_string(f) + ": irreducibles generate "
                                 + std::to_string(M.size()) + " of "
                                 + std::to_string(members.size())
                                 + " elements");
      }
      return M;
    }

    ClosureResult<Boolean> all_of(std::size_t n, bool unit_diagonal) {
      Boolean const            s;
      std::vector<std::size_t> free_bits;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          if (i != j || !unit_diagonal) {
            free_bits.push_back(i * n + j);
          }
        }
      }
      std::uint64_t const     base = unit_diagonal ? diagonal_bits(n) : 0;
      std::vector<BoolMatrix> elements;
      for (std::uint64_t t = 0; t < (std::uint64_t(1) << free_bits.size()); ++t) {
        std::uint64_t bits = base;
        for (std::size_t k = 0; k < free_bits.size(); ++k) {
          if ((t >> k) & 1u) {
            bits |= std::uint64_t(1) << free_bits[k];
          }
        }
        elements.push_back(from_bits(bits, n));
      }
      return monoid_from_elements(s, elements, n);
    }
  }  // namespace

  ClosureResult<Boolean> boolean_family(Family               f,
                                        std::size_t          n,
                                        FamilyOptions const& opts) {
    if (is_generalized(f)) {
      throw PreconditionError(to_string(f) + " needs a semiring and a scalar sample");
    }
    detail::check_family_dimension(f, n, opts);
    if (f == Family::reflexive || f == Family::convex) {
      return enumerated_family(f, n, opts);
    }
    return family(Boolean(), f, n, {true}, opts);
  }

  ClosureResult<Boolean> upper_triangular_boolean(std::size_t n) {
    if (n < 1 || n > 4) {
      throw PreconditionError("upper_triangular_boolean: need 1 <= n <= 4");
    }
    return all_of(n, false);
  }

  ClosureResult<Boolean> unitriangular_boolean(std::size_t n) {
    if (n < 1 || n > 5) {
      throw PreconditionError("unitriangular_boolean: need 1 <= n <= 5");
    }
    return all_of(n, true);
  }

  std::uint64_t catalan_number(std::size_t n) {
    // C_{k+1} = C_k * 2(2k+1) / (k+2)
    std::uint64_t c = 1;
    for (std::size_t k = 0; k < n; ++k) {
      c = c * 2 * (2 * k + 1) / (k + 2);
    }
    return c;
  }

  PresentationCheck check_catalan_presentation(std::size_t n) {
    if (n < 2) {
      throw PreconditionError("check_catalan_presentation: need n >= 2");
    }
    Boolean const s;
    auto e = [&](std::size_t i) { return step_matrix(s, n, i); };
    auto prod = [&](std::vector<std::size_t> const& w) {
      BoolMatrix A = identity(s, n);
      for (auto i : w) {
        A = multiply(s, A, e(i));
      }
      return A;
    };
    auto label = [](std::vector<std::size_t> const& w) {
      std::string out;
      for (auto i : w) {
        out += (out.empty() ? "e" : " e") + std::to_string(i);
      }
      return out;
    };
    PresentationCheck check;
    check.n   = n;
    auto push = [&](std::vector<std::size_t> const& l, std::vector<std::size_t> const& r) {
      check.relations.push_back({label(l), label(r), prod(l) == prod(r)});
    };
    for (std::size_t i = 1; i < n; ++i) {
      push({i, i}, {i});
      for (std::size_t j = i + 2; j < n; ++j) {
        push({i, j}, {j, i});
      }
      if (i + 1 < n) {
        push({i, i + 1, i}, {i, i + 1});
        push({i + 1, i, i + 1}, {i, i + 1});
      }
    }
    check.closure_size   = boolean_family(Family::catalan_upper, n).size();
    check.catalan_number = catalan_number(n);
    return check;
  }

  InclusionReport check_inclusions(std::size_t n, FamilyOptions const& opts) {
    InclusionReport report;
    report.n = n;
    struct Enumerated {
      std::string            name;
      ClosureResult<Boolean> monoid;
      bool                   capped;
    };
    auto enumerate = [&](Family f) {
      try {
        return Enumerated{to_string(f), boolean_family(f, n, opts), false};
      } catch (ClosureCapExceeded<Boolean> const& e) {
        return Enumerated{to_string(f), e.partial, true};
      }
    };
    std::vector<Enumerated> chain;
    chain.push_back(enumerate(Family::double_catalan));
    chain.push_back(enumerate(Family::gossip));
    chain.push_back(enumerate(Family::one_way_gossip));
    chain.push_back(enumerate(Family::reflexive));
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      auto const&    sub   = chain[k];
      auto const&    super = chain[k + 1];
      InclusionCheck c{sub.name,
                       super.name,
                       sub.monoid.size(),
                       super.monoid.size(),
                       true,
                       sub.capped || super.capped};
      for (auto const& A : sub.monoid.elements) {
        // R_n is all reflexive matrices; a capped enumeration of it is
        // replaced by the membership test.
        bool const inside = super.capped && k + 2 == chain.size()
                                ? is_reflexive(Boolean(), A)
                                : super.monoid.contains(A);
        c.contained = c.contained && inside;
      }
      report.checks.push_back(c);
    }
    return report;
  }

  std::pair<std::size_t, bool> detail::strong_components(
      std::size_t                                                 vertices,
      std::vector<std::pair<std::uint32_t, std::uint32_t>> const& edges) {
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
    Graph g(edges.begin(), edges.end(), vertices);
    std::vector<std::size_t> component(vertices);
    auto const               count = boost::strong_components(
        g,
        boost::make_iterator_property_map(component.begin(),
                                          boost::get(boost::vertex_index, g)));
    return {count, count == vertices};
  }

}  // namespace semiid
