#include "cartan/linalg.hpp"

namespace cartan {

std::optional<QVec> solve(const QMat& a, const QVec& b) {
  if (a.empty()) return QVec{};
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  if (b.size() != rows) throw std::invalid_argument("solve: size mismatch");
  QMat aug = a;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  const EchelonResult<Rational> e = reduced_row_echelon(aug);
  // Inconsistent iff the augmented column is a pivot.
  for (int c : e.pivot_cols) {
    if (static_cast<std::size_t>(c) == cols) return std::nullopt;
  }
  QVec x(cols, Rational(0));
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    x[static_cast<std::size_t>(e.pivot_cols[r])] = e.rref[r][cols];
  }
  return x;
}

std::vector<Rational> char_poly(const QMat& a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("char_poly: matrix not square");
  }
  // Faddeev-LeVerrier: M_1 = A, c_k = -tr(A M_k)/k with M_{k+1} = A M_k + c_k I.
  std::vector<Rational> coeff(n + 1, Rational(0));
  coeff[n] = Rational(1);
  if (n == 0) return coeff;
  QMat m(n, QVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
  QMat am = m;
  for (std::size_t k = 1; k <= n; ++k) {
    // am = A * m
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s(0);
        for (std::size_t t = 0; t < n; ++t) s += a[i][t] * m[t][j];
        am[i][j] = s;
      }
    }
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    const Rational ck = -tr / Rational(static_cast<long>(k));
    coeff[n - k] = ck;
    m = am;
    for (std::size_t i = 0; i < n; ++i) m[i][i] += ck;
  }
  return coeff;
}

}  // namespace cartan
