#pragma once

// Admissible monomial orders presented as integer weight matrices. A
// monomial maps to its vector of row dot products, compared
// lexicographically. Admissibility (1 is minimal, translation invariance)
// holds exactly when the first nonzero entry of every column is positive;
// totality needs full rank.

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "monomial.hpp"

namespace pbwelim {

// Default tie-break significance: generator with the larger index is the
// more significant one (a_1 smallest, a_n largest).
inline std::vector<std::uint32_t> default_significance(std::size_t n) {
  std::vector<std::uint32_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<std::uint32_t>(n - 1 - i);
  return s;
}

inline void check_significance(std::size_t n, const std::vector<std::uint32_t>& sig) {
  if (sig.size() != n) throw std::invalid_argument("significance list has wrong length");
  std::vector<bool> seen(n, false);
  for (std::uint32_t g : sig) {
    if (g >= n || seen[g]) throw std::invalid_argument("significance list is not a permutation");
    seen[g] = true;
  }
}

class MatrixOrder {
 public:
  MatrixOrder(std::size_t n, std::vector<std::vector<std::int64_t>> rows)
      : n_(n), rows_(std::move(rows)) {
    if (n_ == 0) throw std::invalid_argument("order needs at least one variable");
    if (rows_.empty()) throw std::invalid_argument("order matrix has no rows");
    for (const auto& r : rows_) {
      if (r.size() != n_) throw std::invalid_argument("order matrix row has wrong length");
    }
    for (std::size_t j = 0; j < n_; ++j) {
      std::size_t r = 0;
      while (r < rows_.size() && rows_[r][j] == 0) ++r;
      if (r == rows_.size()) {
        throw std::invalid_argument("order matrix has a zero column (not total)");
      }
      if (rows_[r][j] < 0) {
        throw std::invalid_argument("order matrix is not admissible (first nonzero entry of a column is negative)");
      }
    }
    if (rank() != n_) {
      throw std::invalid_argument("order matrix does not have full column rank (not total)");
    }
  }

  std::size_t arity() const { return n_; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

  std::strong_ordering compare(const Monomial& u, const Monomial& v) const {
    if (u.size() != n_ || v.size() != n_) {
      throw std::invalid_argument("monomial arity does not match order");
    }
    for (const auto& row : rows_) {
      __int128 d = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        d += static_cast<__int128>(row[i]) *
             (static_cast<std::int64_t>(u[i]) - static_cast<std::int64_t>(v[i]));
      }
      if (d < 0) return std::strong_ordering::less;
      if (d > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& u, const Monomial& v) const {
    return compare(u, v) == std::strong_ordering::less;
  }
  bool greater(const Monomial& u, const Monomial& v) const {
    return compare(u, v) == std::strong_ordering::greater;
  }

  // True when the first row is exactly the given weight vector, so the
  // order refines the weighted degree filtration.
  bool degree_compatible(const Weights& w) const {
    if (w.size() != n_) return false;
    for (std::size_t i = 0; i < n_; ++i) {
      if (rows_[0][i] != w[i]) return false;
    }
    return true;
  }

  bool operator==(const MatrixOrder&) const = default;

 private:
  std::size_t rank() const {
    std::vector<std::vector<mpq_class>> a(rows_.size(), std::vector<mpq_class>(n_));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < n_; ++c) a[r][c] = rows_[r][c];
    }
    std::size_t rk = 0;
    for (std::size_t col = 0; col < n_ && rk < a.size(); ++col) {
      std::size_t piv = rk;
      while (piv < a.size() && a[piv][col] == 0) ++piv;
      if (piv == a.size()) continue;
      std::swap(a[rk], a[piv]);
      for (std::size_t r = rk + 1; r < a.size(); ++r) {
        if (a[r][col] == 0) continue;
        mpq_class f = a[r][col] / a[rk][col];
        for (std::size_t c = col; c < n_; ++c) a[r][c] -= f * a[rk][c];
      }
      ++rk;
    }
    return rk;
  }

  std::size_t n_;
  std::vector<std::vector<std::int64_t>> rows_;
};

// Pure lexicographic order; sig lists generators from most to least
// significant.
inline MatrixOrder lex_order(std::size_t n, const std::vector<std::uint32_t>& sig) {
  check_significance(n, sig);
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(n);
  for (std::uint32_t g : sig) {
    std::vector<std::int64_t> row(n, 0);
    row[g] = 1;
    rows.push_back(std::move(row));
  }
  return MatrixOrder(n, std::move(rows));
}

inline MatrixOrder lex_order(std::size_t n) { return lex_order(n, default_significance(n)); }

// Weighted-degree order with lexicographic tie-break.
inline MatrixOrder graded_order(const Weights& w, const std::vector<std::uint32_t>& sig) {
  std::size_t n = w.size();
  check_significance(n, sig);
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(n + 1);
  rows.push_back(w.w);
  for (std::uint32_t g : sig) {
    std::vector<std::int64_t> row(n, 0);
    row[g] = 1;
    rows.push_back(std::move(row));
  }
  return MatrixOrder(n, std::move(rows));
}

inline MatrixOrder graded_order(const Weights& w) {
  return graded_order(w, default_significance(w.size()));
}

// Two-block order that ranks any monomial touching the complement of
// `keep` above every monomial supported inside `keep`: first row is the
// weight vector restricted to the complement, then lex ties on the
// complement, then the weighted block order on `keep`.
inline MatrixOrder elimination_order(std::size_t n, const std::vector<std::uint32_t>& keep,
                                     const Weights& w,
                                     const std::vector<std::uint32_t>& sig) {
  if (w.size() != n) throw std::invalid_argument("weights arity mismatch");
  check_significance(n, sig);
  std::vector<bool> in_keep(n, false);
  for (std::uint32_t g : keep) {
    if (g >= n) throw std::invalid_argument("keep index out of range");
    if (in_keep[g]) throw std::invalid_argument("duplicate keep index");
    in_keep[g] = true;
  }
  std::vector<std::vector<std::int64_t>> rows;
  auto block_rows = [&](bool keep_side) {
    std::vector<std::int64_t> deg(n, 0);
    bool nonempty = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (in_keep[i] == keep_side) {
        deg[i] = w[i];
        nonempty = true;
      }
    }
    if (!nonempty) return;
    rows.push_back(std::move(deg));
    for (std::uint32_t g : sig) {
      if (in_keep[g] != keep_side) continue;
      std::vector<std::int64_t> row(n, 0);
      row[g] = 1;
      rows.push_back(std::move(row));
    }
  };
  block_rows(false);
  block_rows(true);
  return MatrixOrder(n, std::move(rows));
}

inline MatrixOrder elimination_order(std::size_t n, const std::vector<std::uint32_t>& keep,
                                     const Weights& w) {
  return elimination_order(n, keep, w, default_significance(n));
}

}  // namespace pbwelim
