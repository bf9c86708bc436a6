#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace cartan {

// Exact rational scalar used everywhere in the library.
// Thin wrapper over GMP's mpq_class that enforces the canonical form
// (lowest terms, denominator > 0) on every construction path; GMP keeps
// arithmetic results canonical once the operands are.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  // Takes ownership of an mpq value; canonicalizes.
  static Rational from_mpq(mpq_class q) {
    q.canonicalize();
    return Rational(std::move(q));
  }

  // Accepts "p", "-p", "p/q" (q > 0 after canonicalization).
  static Rational from_string(const std::string& s) {
    if (!looks_rational(s))
      throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
    mpq_class q(s, 10);
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    q.canonicalize();
    return Rational(std::move(q));
  }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  const mpq_class& raw() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
  explicit Rational(mpq_class q) : v_(std::move(q)) {}

  static bool looks_rational(const std::string& s) {
    std::size_t i = 0;
    auto digits = [&](std::size_t& j) {
      std::size_t start = j;
      while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
      return j > start;
    };
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (!digits(i)) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    if (i < s.size() && s[i] == '-') ++i;  // tolerated; canonicalized away
    if (!digits(i)) return false;
    return i == s.size();
  }

  mpq_class v_;
};

// Smallest convenient rational q with q*q >= r (exact square root when r is a
// perfect square). Used to build segment endpoints where the geometric
// construction calls for a square root: any upper bound of the root keeps the
// endpoint strictly inside the open region, so exactness is preserved.
inline Rational sqrt_upper_bound(const Rational& r) {
  if (r.sign() < 0) throw std::invalid_argument("sqrt_upper_bound: negative input");
  if (r.is_zero()) return Rational(0);
  const mpz_class num = r.raw().get_num();
  const mpz_class den = r.raw().get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rational::from_mpq(mpq_class(sn, sd));
  }
  // ceil(sqrt(num*den))/den >= sqrt(num/den); tighten with two Newton steps,
  // each of which stays at or above the true root.
  mpz_class nd = num * den;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), nd.get_mpz_t());
  root += 1;
  Rational bound = Rational::from_mpq(mpq_class(root, den));
  for (int step = 0; step < 2; ++step) {
    Rational next = (bound + r / bound) / Rational(2);
    if (next * next >= r) bound = next;
  }
  return bound;
}

}  // namespace cartan
