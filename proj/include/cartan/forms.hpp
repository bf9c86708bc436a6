#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cartan/poly.hpp"

namespace cartan {

// Strictly increasing multi-index over {1..5}, stored as a bitmask.
// Ordering is lexicographic on the index tuples (12 < 13 < 14 < 15 < 23 < ...),
// which fixes the coefficient order used throughout the fiber computations.
class MultiIndex {
public:
  MultiIndex() : mask_(0) {}

  static MultiIndex from_mask(unsigned mask);
  // Builds from possibly unsorted 1-based indices. Returns the sorted index
  // and the permutation sign; sign 0 means a repeated index (zero term).
  static std::pair<MultiIndex, int> from_indices(const std::vector<int>& idx);
  static std::vector<MultiIndex> all_of_degree(int k);  // lex order

  int degree() const;
  unsigned mask() const { return mask_; }
  std::vector<int> indices() const;  // ascending, 1-based
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }

  // Sign of sorting the concatenation (a, b) into increasing order;
  // 0 when the index sets overlap.
  static int merge_sign(const MultiIndex& a, const MultiIndex& b);
  static MultiIndex merged(const MultiIndex& a, const MultiIndex& b);

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.mask_ == b.mask_; }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.mask_ != b.mask_; }
  friend bool operator<(const MultiIndex& a, const MultiIndex& b);

  std::string str() const;  // e.g. "{1,3,4}"

private:
  explicit MultiIndex(unsigned mask) : mask_(mask) {}
  unsigned mask_;
};

// Sparse differential k-form with polynomial coefficients on the 5-chart.
// A form always knows its degree, so the zero form of each degree is distinct;
// no zero coefficients are stored.
class KForm {
public:
  explicit KForm(int degree = 0);
  static KForm from_poly(const Poly& p);            // degree 0
  static KForm dx(int i);                           // coordinate 1-form
  static KForm term(const MultiIndex& mi, const Poly& coeff);

  int degree() const { return degree_; }
  const std::map<MultiIndex, Poly>& terms() const { return terms_; }
  Poly coefficient(const MultiIndex& mi) const;
  bool is_zero() const { return terms_.empty(); }

  KForm operator-() const;
  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(const Poly& p, const KForm& w);
  friend KForm operator*(const Rational& c, const KForm& w);

  friend bool operator==(const KForm& a, const KForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

  std::string str() const;

private:
  void add(const MultiIndex& mi, const Poly& p);

  int degree_;
  std::map<MultiIndex, Poly> terms_;

  friend KForm wedge(const KForm& a, const KForm& b);
  friend KForm exterior_derivative(const KForm& a);
  friend KForm evaluate(const KForm& a, const Point& p);
};

// Vector field in the coordinate frame, one polynomial component per d/dx_i.
struct VectorField {
  std::array<Poly, 5> c{};

  static VectorField basis(int i);  // d/dx_i
  std::array<Rational, 5> evaluate(const Point& p) const;

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& o);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator*(const Poly& p, const VectorField& x);
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.c == b.c; }

  std::string str() const;
};

// Exterior product. Degrees add; any product of total degree > 5 is identically
// zero on the 5-chart and comes back as the zero 5-form.
KForm wedge(const KForm& a, const KForm& b);

// Coordinate exterior derivative; degree rises by one (d of a 5-form is the
// zero 5-form).
KForm exterior_derivative(const KForm& a);

// Lie bracket [X, Y], component i = sum_j (X_j dY_i/dx_j - Y_j dX_i/dx_j).
VectorField lie_bracket(const VectorField& x, const VectorField& y);

// Pairing of a 1-form with a vector field. Throws unless deg(alpha) == 1.
Poly pair(const KForm& alpha, const VectorField& x);

// Evaluates all coefficients at p; result has constant coefficients.
KForm evaluate(const KForm& a, const Point& p);

// Full evaluation of a k-form on k vector fields (alternating sum of
// component-minor determinants). Used for the bracket/derivative identity and
// the restriction checks.
Poly evaluate_on_fields(const KForm& w, const std::vector<VectorField>& fields);

}  // namespace cartan
