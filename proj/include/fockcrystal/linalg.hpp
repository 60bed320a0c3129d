#pragma once

#include <cstddef>
#include <vector>

#include "fockcrystal/rational.hpp"

namespace fc {

struct NullspaceResult {
  long long dim = 0;
  // one vector per free column, reduced echelon back-substitution; deterministic
  std::vector<std::vector<Rat>> basis;
};

// exact kernel of the row system: rows * x = 0
inline NullspaceResult nullspace(std::vector<std::vector<Rat>> rows, std::size_t ncols) {
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pr = rank;
    while (pr < rows.size() && rows[pr][col] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[rank], rows[pr]);
    Rat inv = rows[rank][col];
    for (std::size_t j = col; j < ncols; ++j) rows[rank][j] /= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rat m = rows[r][col];
      for (std::size_t j = col; j < ncols; ++j) rows[r][j] -= m * rows[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  NullspaceResult out;
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  for (std::size_t col = 0; col < ncols; ++col) {
    if (is_pivot[col]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[col] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][col];
    out.basis.push_back(std::move(v));
  }
  out.dim = static_cast<long long>(out.basis.size());
  return out;
}

}  // namespace fc
