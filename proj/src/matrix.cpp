#include "semiid/matrix.hpp"

#include <sstream>

namespace semiid {

  std::vector<std::vector<std::string>> split_matrix_text(
      std::string const& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream                     all(text);
    std::string                           row;
    while (std::getline(all, row, ';')) {
      std::stringstream        cells(row);
      std::vector<std::string> entries;
      std::string              cell;
      while (cells >> cell) {
        entries.push_back(cell);
      }
      rows.push_back(std::move(entries));
    }
    if (rows.empty() || rows.size() > max_dimension) {
      throw ParseError("matrix text needs 1 to " + std::to_string(max_dimension)
                       + " rows: '" + text + "'");
    }
    return rows;
  }

  namespace {
    template <typename Get>
    bool ones_contiguous(Eigen::Index n, Get get) {
      Eigen::Index first = -1, last = -1, count = 0;
      for (Eigen::Index k = 0; k < n; ++k) {
        if (get(k)) {
          if (first < 0) {
            first = k;
          }
          last = k;
          ++count;
        }
      }
      return count == 0 || last - first + 1 == count;
    }
  }  // namespace

  bool is_convex(BoolMatrix const& A) {
    auto const n = A.rows();
    if (A.cols() != n) {
      return false;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!A(i, i)) {
        return false;
      }
      if (!ones_contiguous(n, [&](Eigen::Index k) { return A(i, k); })
          || !ones_contiguous(n, [&](Eigen::Index k) { return A(k, i); })) {
        return false;
      }
    }
    return true;
  }

  BoolMatrix upper_profile(BoolMatrix const& A) {
    BoolMatrix U = A;
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      for (Eigen::Index j = 0; j < i; ++j) {
        U(i, j) = false;
      }
    }
    return U;
  }

  std::vector<std::size_t> decompose_convex(BoolMatrix const& A) {
    Boolean const s;
    if (!is_convex(A) || !is_unitriangular(s, A)) {
      throw PreconditionError(
          "decompose_convex: matrix is not convex upper unitriangular");
    }
    auto const               n = static_cast<std::size_t>(A.rows());
    std::vector<std::size_t> word;
    for (std::size_t i = n - 1; i >= 1; --i) {
      std::size_t last = i;
      for (std::size_t j = i; j <= n; ++j) {
        if (A(i - 1, j - 1)) {
          last = j;
        }
      }
      for (std::size_t k = i; k < last; ++k) {
        word.push_back(k);
      }
    }
    return word;
  }

}  // namespace semiid
