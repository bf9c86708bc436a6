#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cartan/rational.hpp"

namespace cartan {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row-major, rectangular

// Reduced row echelon form with deterministic pivoting: columns are scanned
// left to right and the first row (lowest index) with a nonzero entry becomes
// the pivot. Works over any exact field type with +,-,*,/ and is_zero().
template <class F>
struct EchelonResult {
  std::vector<std::vector<F>> rref;
  std::vector<int> pivot_cols;  // ascending
};

template <class F>
EchelonResult<F> reduced_row_echelon(std::vector<std::vector<F>> m) {
  EchelonResult<F> out;
  if (m.empty()) return out;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  for (const auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("reduced_row_echelon: ragged matrix");
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!m[i][c].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const F inv_lead = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] / inv_lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const F factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
    }
    out.pivot_cols.push_back(static_cast<int>(c));
    ++r;
  }
  out.rref = std::move(m);
  return out;
}

// Rank over the field of fractions.
template <class F>
int exact_rank_t(const std::vector<std::vector<F>>& m) {
  if (m.empty()) return 0;
  return static_cast<int>(reduced_row_echelon(m).pivot_cols.size());
}

inline int exact_rank(const QMat& m) { return exact_rank_t(m); }

// Kernel basis in the deterministic "one vector per free column" form, free
// columns ascending; each vector has a 1 in its free column.
template <class F>
std::vector<std::vector<F>> kernel_basis(const std::vector<std::vector<F>>& m) {
  if (m.empty()) throw std::invalid_argument("kernel_basis: empty matrix");
  const std::size_t cols = m[0].size();
  const EchelonResult<F> e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<F>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(cols, F(0));
    v[f] = F(1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      const std::size_t pc = static_cast<std::size_t>(e.pivot_cols[r]);
      v[pc] = F(0) - e.rref[r][f];
    }
    out.push_back(std::move(v));
  }
  return out;
}

// A particular solution of A x = b, if one exists.
std::optional<QVec> solve(const QMat& a, const QVec& b);

// Characteristic polynomial det(lambda I - A) of a square rational matrix via
// the Faddeev-LeVerrier recursion; exact. Coefficients ascending, monic.
std::vector<Rational> char_poly(const QMat& a);

}  // namespace cartan
