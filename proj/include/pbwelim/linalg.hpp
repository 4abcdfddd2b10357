#pragma once

// Dense exact Gaussian elimination, enough for rank counts and echelon
// witnesses. Pivoting is deterministic: first nonzero entry scanning rows
// top to bottom, columns left to right.

#include <cstddef>
#include <vector>

namespace pbwelim {

template <class F>
struct EchelonResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;  // one entry per nonzero row, increasing
};

// Reduces `rows` in place to row echelon form (pivots normalized to 1,
// entries below pivots cleared). Zero rows sink to the bottom.
template <class F>
EchelonResult<F> row_echelon(const F& K, std::vector<std::vector<typename F::Elem>>& rows) {
  EchelonResult<F> res;
  if (rows.empty()) return res;
  std::size_t m = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < m && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && K.is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    typename F::Elem s = K.inv(rows[r][col]);
    for (std::size_t c = col; c < m; ++c) rows[r][c] = K.mul(rows[r][c], s);
    for (std::size_t rr = r + 1; rr < rows.size(); ++rr) {
      if (K.is_zero(rows[rr][col])) continue;
      typename F::Elem f = rows[rr][col];
      for (std::size_t c = col; c < m; ++c) {
        rows[rr][c] = K.sub(rows[rr][c], K.mul(f, rows[r][c]));
      }
    }
    res.pivot_col.push_back(col);
    ++r;
  }
  res.rank = r;
  return res;
}

template <class F>
std::size_t matrix_rank(const F& K, std::vector<std::vector<typename F::Elem>> rows) {
  return row_echelon(K, rows).rank;
}

}  // namespace pbwelim
