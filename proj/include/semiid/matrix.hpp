#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "semiid/errors.hpp"
#include "semiid/polynomial.hpp"
#include "semiid/semiring.hpp"
#include "semiid/semirings.hpp"
#include "semiid/word.hpp"

// Dense square matrices over a semiring. Storage is Eigen; all arithmetic goes
// through the semiring object, never through the scalar's own operators.
// Vertex arguments (i, j) of the named constructors and entry formulas are
// 1-based, matching the text formats; Eigen indexing stays 0-based.

namespace semiid {

  template <Semiring S>
  using Matrix = Eigen::Matrix<value_t<S>, Eigen::Dynamic, Eigen::Dynamic>;

  using BoolMatrix = Matrix<Boolean>;

  inline constexpr std::size_t max_dimension = 8;

  namespace detail {
    inline void require_vertex(std::size_t v, std::size_t n, char const* what) {
      if (v < 1 || v > n) {
        throw PreconditionError(std::string(what) + ": vertex "
                                + std::to_string(v) + " outside [1, "
                                + std::to_string(n) + "]");
      }
    }

    template <Semiring S>
    void require_square(Matrix<S> const& A, char const* what) {
      if (A.rows() != A.cols() || A.rows() < 1) {
        throw PreconditionError(std::string(what)
                                + ": matrices must be square, n >= 1");
      }
    }

    // (AB)_{ij} = sum_k A_{ik} B_{kj}; no validation.
    template <Semiring S>
    Matrix<S> multiply_unchecked(S const&         s,
                                 Matrix<S> const& A,
                                 Matrix<S> const& B) {
      auto const n = A.rows();
      Matrix<S>  C(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
          value_t<S> acc = s.zero();
          for (Eigen::Index k = 0; k < n; ++k) {
            acc = s.add(acc, s.mul(A(i, k), B(k, j)));
          }
          C(i, j) = std::move(acc);
        }
      }
      return C;
    }
  }  // namespace detail

  template <Semiring S>
  Matrix<S> constant(S const& s, std::size_t n, value_t<S> const& value) {
    (void) s;
    Matrix<S> A(n, n);
    A.fill(value);
    return A;
  }

  template <Semiring S>
  Matrix<S> zeros(S const& s, std::size_t n) {
    return constant(s, n, s.zero());
  }

  template <Semiring S>
  Matrix<S> identity(S const& s, std::size_t n) {
    Matrix<S> A = zeros(s, n);
    for (std::size_t i = 0; i < n; ++i) {
      A(i, i) = s.one();
    }
    return A;
  }

  // Z: every entry 1_S.
  template <Semiring S>
  Matrix<S> all_ones(S const& s, std::size_t n) {
    return constant(s, n, s.one());
  }

  template <Semiring S>
  void require_members(S const& s, Matrix<S> const& A) {
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      for (Eigen::Index j = 0; j < A.cols(); ++j) {
        require_member(s, A(i, j));
      }
    }
  }

  template <Semiring S>
  Matrix<S> multiply(S const& s, Matrix<S> const& A, Matrix<S> const& B) {
    detail::require_square<S>(A, "multiply");
    detail::require_square<S>(B, "multiply");
    if (A.rows() != B.rows()) {
      throw PreconditionError("multiply: dimension mismatch");
    }
    require_members(s, A);
    require_members(s, B);
    return detail::multiply_unchecked(s, A, B);
  }

  template <Semiring S>
  Matrix<S> power(S const& s, Matrix<S> const& A, std::uint64_t e) {
    detail::require_square<S>(A, "power");
    Matrix<S> result = identity(s, A.rows());
    Matrix<S> base   = A;
    while (e != 0) {
      if (e & 1u) {
        result = detail::multiply_unchecked(s, result, base);
      }
      e >>= 1u;
      if (e != 0) {
        base = detail::multiply_unchecked(s, base, base);
      }
    }
    return result;
  }

  // Left-to-right product; the empty product is I_n.
  template <Semiring S>
  Matrix<S> product(S const&                      s,
                    std::vector<Matrix<S>> const& factors,
                    std::size_t                   n) {
    Matrix<S> acc = identity(s, n);
    for (auto const& X : factors) {
      acc = detail::multiply_unchecked(s, acc, X);
    }
    return acc;
  }

  template <Semiring S>
  bool is_upper_triangular(S const& s, Matrix<S> const& A) {
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      for (Eigen::Index j = 0; j < i; ++j) {
        if (!(A(i, j) == s.zero())) {
          return false;
        }
      }
    }
    return true;
  }

  template <Semiring S>
  bool is_reflexive(S const& s, Matrix<S> const& A) {
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      if (!(A(i, i) == s.one())) {
        return false;
      }
    }
    return true;
  }

  template <Semiring S>
  bool is_unitriangular(S const& s, Matrix<S> const& A) {
    return is_upper_triangular(s, A) && is_reflexive(s, A);
  }

  // A <= B entrywise in the natural order.
  template <Semiring S>
  bool leq_entrywise(S const& s, Matrix<S> const& A, Matrix<S> const& B) {
    require_idempotent(s);
    if (A.rows() != B.rows() || A.cols() != B.cols()) {
      throw PreconditionError("leq_entrywise: dimension mismatch");
    }
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      for (Eigen::Index j = 0; j < A.cols(); ++j) {
        if (!(s.add(A(i, j), B(i, j)) == B(i, j))) {
          return false;
        }
      }
    }
    return true;
  }

  // D(i, j; value): identity plus `value` at (i, j), i != j.
  template <Semiring S>
  Matrix<S> one_way_call(S const&          s,
                         std::size_t       n,
                         std::size_t       i,
                         std::size_t       j,
                         value_t<S> const& value) {
    detail::require_vertex(i, n, "one_way_call");
    detail::require_vertex(j, n, "one_way_call");
    if (i == j) {
      throw PreconditionError("one_way_call: need i != j");
    }
    require_member(s, value);
    if (!(value == s.one())) {
      require_interval(s);
    }
    Matrix<S> A    = identity(s, n);
    A(i - 1, j - 1) = value;
    return A;
  }

  template <Semiring S>
  Matrix<S> one_way_call(S const& s, std::size_t n, std::size_t i, std::size_t j) {
    return one_way_call(s, n, i, j, s.one());
  }

  // E(i, j; value) = D(i, j; value) D(j, i; value).
  template <Semiring S>
  Matrix<S> two_way_call(S const&          s,
                         std::size_t       n,
                         std::size_t       i,
                         std::size_t       j,
                         value_t<S> const& value) {
    return detail::multiply_unchecked(s,
                                      one_way_call(s, n, i, j, value),
                                      one_way_call(s, n, j, i, value));
  }

  template <Semiring S>
  Matrix<S> two_way_call(S const& s, std::size_t n, std::size_t i, std::size_t j) {
    return two_way_call(s, n, i, j, s.one());
  }

  // D(i) = D(i, i + 1).
  template <Semiring S>
  Matrix<S> step_matrix(S const& s, std::size_t n, std::size_t i) {
    if (i < 1 || i + 1 > n) {
      throw PreconditionError("step_matrix: need 1 <= i <= n - 1");
    }
    return one_way_call(s, n, i, i + 1);
  }

  // E(i) = D(i) D(i)^T.
  template <Semiring S>
  Matrix<S> step_idempotent(S const& s, std::size_t n, std::size_t i) {
    Matrix<S> D = step_matrix(s, n, i);
    return detail::multiply_unchecked(s, D, Matrix<S>(D.transpose()));
  }

  // Images of letters; extended multiplicatively to words.
  template <Semiring S>
  struct Morphism {
    std::map<Letter, Matrix<S>> images;

    std::size_t dimension() const {
      if (images.empty()) {
        throw PreconditionError("morphism has no images");
      }
      return static_cast<std::size_t>(images.begin()->second.rows());
    }

    std::string alphabet() const {
      std::string out;
      for (auto const& [c, A] : images) {
        out.push_back(c);
      }
      return out;
    }

    Matrix<S> const& at(Letter c) const {
      auto it = images.find(c);
      if (it == images.end()) {
        throw PreconditionError(std::string("morphism has no image for '")
                                + c + "'");
      }
      return it->second;
    }
  };

  template <Semiring S>
  Matrix<S> evaluate(S const& s, Morphism<S> const& phi, Word const& w) {
    Matrix<S> acc = identity(s, phi.dimension());
    for (Letter c : w) {
      acc = detail::multiply_unchecked(s, acc, phi.at(c));
    }
    return acc;
  }

  // Right-hand side of the walk expansion of phi(w)_{i,j} for phi into
  // UT_n(S): the sum over u with |u| <= n - 1 and strictly increasing paths
  // rho from i to j of (prod_k phi(u_k)_{rho_{k-1}, rho_k}) f_{u,rho}^w(x),
  // where x(s, v) = phi(s)_{v,v}.
  template <Semiring S>
  value_t<S> walk_entry(S const&           s,
                        Morphism<S> const& phi,
                        Word const&        w,
                        std::size_t        i,
                        std::size_t        j) {
    auto const n = phi.dimension();
    detail::require_vertex(i, n, "walk_entry");
    detail::require_vertex(j, n, "walk_entry");
    for (auto const& [c, A] : phi.images) {
      if (!is_upper_triangular(s, A)) {
        throw PreconditionError("walk_entry: image of '" + std::string(1, c)
                                + "' is not upper triangular");
      }
    }
    if (i > j) {
      return s.zero();
    }
    auto const    sigma = phi.alphabet();
    Assignment<S> x;
    for (auto const& [c, A] : phi.images) {
      for (std::size_t v = 1; v <= n; ++v) {
        x[VariableId{c, v}] = A(v - 1, v - 1);
      }
    }

    value_t<S>               total = s.zero();
    std::vector<std::size_t> rho{i};
    // Extend rho one strictly larger vertex at a time, reaching j exactly.
    std::function<void(Word const&)> extend = [&](Word const& u) {
      if (rho.back() == j) {
        value_t<S> coefficient = s.one();
        for (std::size_t k = 1; k <= u.size(); ++k) {
          coefficient
              = s.mul(coefficient, phi.at(u[k - 1])(rho[k - 1] - 1, rho[k] - 1));
        }
        if (coefficient == s.zero()) {
          return;
        }
        auto const f = build_f(u, rho, w, n, sigma);
        total        = s.add(total, s.mul(coefficient, evaluate(f, x, s)));
        return;
      }
      for (std::size_t next = rho.back() + 1; next <= j; ++next) {
        rho.push_back(next);
        for (Letter c : sigma) {
          extend(u + c);
        }
        rho.pop_back();
      }
    };
    extend(Word());
    return total;
  }

  // Sum over block chains rho from i to j of prod_k X(k)_{rho_{k-1}, rho_k};
  // a block chain visits pairwise distinct vertices in constant runs.
  template <Semiring S>
  value_t<S> block_chain_entry(S const&                      s,
                               std::vector<Matrix<S>> const& factors,
                               std::size_t                   i,
                               std::size_t                   j) {
    require_interval(s);
    if (factors.empty()) {
      throw PreconditionError("block_chain_entry: need at least one factor");
    }
    auto const n = static_cast<std::size_t>(factors.front().rows());
    detail::require_vertex(i, n, "block_chain_entry");
    detail::require_vertex(j, n, "block_chain_entry");
    for (auto const& X : factors) {
      detail::require_square<S>(X, "block_chain_entry");
      if (static_cast<std::size_t>(X.rows()) != n || !is_reflexive(s, X)) {
        throw PreconditionError(
            "block_chain_entry: factors must be reflexive of equal size");
      }
    }
    value_t<S>        total = s.zero();
    std::vector<bool> visited(n + 1, false);
    visited[i] = true;
    std::function<void(std::size_t, std::size_t, value_t<S> const&)> walk
        = [&](std::size_t k, std::size_t at, value_t<S> const& weight) {
            if (weight == s.zero()) {
              return;
            }
            if (k == factors.size()) {
              if (at == j) {
                total = s.add(total, weight);
              }
              return;
            }
            // j can only be the final block.
            if (visited[j] && at != j) {
              return;
            }
            auto const& X = factors[k];
            walk(k + 1, at, s.mul(weight, X(at - 1, at - 1)));
            for (std::size_t next = 1; next <= n; ++next) {
              if (visited[next]) {
                continue;
              }
              visited[next] = true;
              walk(k + 1, next, s.mul(weight, X(at - 1, next - 1)));
              visited[next] = false;
            }
          };
    walk(0, i, s.one());
    return total;
  }

  // A^{n-1} for reflexive A over an interval semiring, after confirming that
  // A^N = A^{n-1} for n - 1 <= N <= 2n and that A^{n-1} is idempotent.
  template <Semiring S>
  Matrix<S> power_stabilize(S const& s, Matrix<S> const& A) {
    require_interval(s);
    detail::require_square<S>(A, "power_stabilize");
    if (!is_reflexive(s, A)) {
      throw PreconditionError("power_stabilize: matrix is not reflexive");
    }
    auto const      n      = static_cast<std::size_t>(A.rows());
    Matrix<S> const stable = power(s, A, n - 1);
    Matrix<S>       P      = stable;
    for (std::size_t N = n; N <= 2 * n; ++N) {
      P = detail::multiply_unchecked(s, P, A);
      if (!(P == stable)) {
        throw InconsistencyError("power_stabilize: A^" + std::to_string(N)
                                 + " differs from A^" + std::to_string(n - 1));
      }
    }
    if (!(detail::multiply_unchecked(s, stable, stable) == stable)) {
      throw InconsistencyError("power_stabilize: A^(n-1) is not idempotent");
    }
    return stable;
  }

  template <Semiring S>
  Matrix<S> random_matrix(S const&                                 s,
                          std::size_t                              n,
                          Rng&                                     rng,
                          std::function<bool(std::size_t, std::size_t)> const&
                              free_entry) {
    Matrix<S> A = identity(s, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (free_entry(i, j)) {
          A(i, j) = s.sample(rng);
        }
      }
    }
    return A;
  }

  template <Semiring S>
  Matrix<S> random_upper_triangular(S const& s, std::size_t n, Rng& rng) {
    return random_matrix(s, n, rng, [](std::size_t i, std::size_t j) {
      return i <= j;
    });
  }

  template <Semiring S>
  Matrix<S> random_unitriangular(S const& s, std::size_t n, Rng& rng) {
    return random_matrix(s, n, rng, [](std::size_t i, std::size_t j) {
      return i < j;
    });
  }

  template <Semiring S>
  Matrix<S> random_reflexive(S const& s, std::size_t n, Rng& rng) {
    return random_matrix(s, n, rng, [](std::size_t i, std::size_t j) {
      return i != j;
    });
  }

  // Row-major text: entries separated by spaces, rows by "; ".
  template <Semiring S>
  std::string format_matrix(S const& s, Matrix<S> const& A) {
    std::string out;
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      if (i > 0) {
        out += "; ";
      }
      for (Eigen::Index j = 0; j < A.cols(); ++j) {
        if (j > 0) {
          out += ' ';
        }
        out += s.format(A(i, j));
      }
    }
    return out;
  }

  std::vector<std::vector<std::string>> split_matrix_text(
      std::string const& text);

  template <Semiring S>
  Matrix<S> parse_matrix(S const& s, std::string const& text) {
    auto const rows = split_matrix_text(text);
    auto const n    = rows.size();
    Matrix<S>  A(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw ParseError("matrix text must be square: '" + text + "'");
      }
      for (std::size_t j = 0; j < n; ++j) {
        A(i, j) = s.parse(rows[i][j]);
      }
    }
    return A;
  }

  // Boolean-only structure: convexity, upper profile and the factorisation
  // of convex upper unitriangular matrices into steps D(i).

  // Unit diagonal, and the ones of every row and of every column contiguous.
  bool is_convex(BoolMatrix const& A);

  // Entries on or above the diagonal kept, the rest cleared.
  BoolMatrix upper_profile(BoolMatrix const& A);

  // Step indices i_1 ... i_m with D(i_1) ... D(i_m) = A, namely
  // F(n-1) ... F(1) where F(i) = D(i) D(i+1) ... D(m_i - 1) and m_i is the
  // last column holding a one in row i.
  std::vector<std::size_t> decompose_convex(BoolMatrix const& A);

}  // namespace semiid
