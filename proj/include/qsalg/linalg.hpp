#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "qsalg/rational.hpp"

namespace qsalg {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form; returns pivot columns.
inline std::vector<int> rref(RationalMatrix &m, int ncols) {
  std::vector<int> pivots;
  int row = 0, nrows = static_cast<int>(m.size());
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int p = row;
    while (p < nrows && m[static_cast<std::size_t>(p)][static_cast<std::size_t>(col)].is_zero())
      ++p;
    if (p == nrows)
      continue;
    std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(row)]);
    auto &pr = m[static_cast<std::size_t>(row)];
    Rational inv = Rational(1) / pr[static_cast<std::size_t>(col)];
    for (int c = col; c < ncols; ++c)
      pr[static_cast<std::size_t>(c)] *= inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == row)
        continue;
      auto &rr = m[static_cast<std::size_t>(r)];
      Rational f = rr[static_cast<std::size_t>(col)];
      if (f.is_zero())
        continue;
      for (int c = col; c < ncols; ++c)
        if (!pr[static_cast<std::size_t>(c)].is_zero())
          rr[static_cast<std::size_t>(c)] -= f * pr[static_cast<std::size_t>(c)];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(static_cast<std::size_t>(row));
  return pivots;
}

/// Basis of {x : m x = 0}, one vector per free column; each basis vector has
/// a 1 at its free column.
inline RationalMatrix nullspace(RationalMatrix m, int ncols) {
  auto pivots = rref(m, ncols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (int p : pivots)
    is_pivot[static_cast<std::size_t>(p)] = true;
  RationalMatrix basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)])
      continue;
    std::vector<Rational> v(static_cast<std::size_t>(ncols));
    v[static_cast<std::size_t>(f)] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -m[r][static_cast<std::size_t>(f)];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline int rank(RationalMatrix m, int ncols) { return static_cast<int>(rref(m, ncols).size()); }

/// Projection of the augmented system m (ncols unknowns plus a constant
/// column) onto the unknowns not listed in eliminate. Eliminated columns stay
/// in place and are zero in the result.
inline RationalMatrix eliminate_columns(const RationalMatrix &m, int ncols, const std::vector<int> &eliminate) {
  std::vector<int> order = eliminate;
  for (int c = 0; c <= ncols; ++c)
    if (std::find(eliminate.begin(), eliminate.end(), c) == eliminate.end())
      order.push_back(c);
  RationalMatrix p;
  for (const auto &row : m) {
    std::vector<Rational> r;
    for (int c : order)
      r.push_back(row[static_cast<std::size_t>(c)]);
    p.push_back(std::move(r));
  }
  auto pivots = rref(p, ncols + 1);
  int k = static_cast<int>(eliminate.size());
  RationalMatrix out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < k)
      continue;
    std::vector<Rational> r(static_cast<std::size_t>(ncols) + 1);
    for (std::size_t j = 0; j < order.size(); ++j)
      if (static_cast<int>(j) >= k)
        r[static_cast<std::size_t>(order[j])] = p[i][j];
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace qsalg
