#pragma once

#include <stdexcept>

#include "cartan/poly.hpp"

namespace cartan {

// Rational function num/den over the polynomial ring, used as the scalar field
// when eliminating matrices with polynomial entries (generic-rank and kernel
// computations). No gcd cancellation: the matrices involved are tiny, and
// correctness only needs exact arithmetic plus is_zero().
struct RatFunc {
  Poly num;
  Poly den;

  RatFunc() : num(), den(Poly(Rational(1))) {}
  RatFunc(int v) : num(Poly(Rational(v))), den(Poly(Rational(1))) {}
  explicit RatFunc(Poly p) : num(std::move(p)), den(Poly(Rational(1))) {}
  RatFunc(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
  }

  bool is_zero() const { return num.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num * b.num, a.den * b.den);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
    if (a.is_zero()) return RatFunc();
    return RatFunc(a.num * b.den, a.den * b.num);
  }
};

}  // namespace cartan
