#pragma once

#include <array>
#include <map>
#include <string>

#include "cartan/point.hpp"
#include "cartan/rational.hpp"

namespace cartan {

// Exponent vector of a monomial in the chart coordinates x1..x5.
using Exponents = std::array<int, 5>;

// Sparse multivariate polynomial over the rationals in x1..x5.
// Invariant: no zero coefficients are stored, so is_zero() and operator==
// are structural.
class Poly {
public:
  Poly() = default;
  explicit Poly(const Rational& c) { add(Exponents{0, 0, 0, 0, 0}, c); }

  static Poly constant(const Rational& c) { return Poly(c); }
  static Poly variable(int i);  // 1-based coordinate index

  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (valid for any polynomial; the full value when is_constant).
  Rational constant_value() const;
  int total_degree() const;  // 0 for the zero polynomial

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);

  Poly pow(int e) const;  // e >= 0
  Poly derivative(int i) const;  // d/dx_i, 1-based
  Rational evaluate(const Point& p) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Debug/report rendering with the given coordinate names, e.g. "3/2*x1^2*x4".
  std::string str(const std::array<std::string, 5>& names) const;
  std::string str() const;

private:
  void add(const Exponents& e, const Rational& c);

  std::map<Exponents, Rational> terms_;
};

}  // namespace cartan
