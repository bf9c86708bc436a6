#include "cartan/poly.hpp"

#include <stdexcept>

namespace cartan {

Poly Poly::variable(int i) {
  if (i < 1 || i > 5) throw std::invalid_argument("Poly::variable: index out of range");
  Poly p;
  Exponents e{0, 0, 0, 0, 0};
  e[static_cast<std::size_t>(i - 1)] = 1;
  p.add(e, Rational(1));
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0, 0, 0};
}

Rational Poly::constant_value() const {
  auto it = terms_.find(Exponents{0, 0, 0, 0, 0});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int k : e) d += k;
    if (d > deg) deg = d;
  }
  return deg;
}

void Poly::add(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < 5; ++i) e[i] = ea[i] + eb[i];
      out.add(e, ca * cb);
    }
  }
  return out;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly out;
  if (c.is_zero()) return out;
  for (const auto& [e, pc] : p.terms_) out.terms_.emplace(e, c * pc);
  return out;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly out(Rational(1));
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

Poly Poly::derivative(int i) const {
  if (i < 1 || i > 5) throw std::invalid_argument("Poly::derivative: index out of range");
  const std::size_t k = static_cast<std::size_t>(i - 1);
  Poly out;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents d = e;
    d[k] -= 1;
    out.add(d, Rational(e[k]) * c);
  }
  return out;
}

Rational Poly::evaluate(const Point& p) const {
  Rational out(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < 5; ++i) {
      for (int k = 0; k < e[i]; ++k) term *= p.x[i];
    }
    out += term;
  }
  return out;
}

std::string Poly::str(const std::array<std::string, 5>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string factors;
    for (std::size_t i = 0; i < 5; ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += names[i];
      if (e[i] > 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty()) {
      out += mag.str();
    } else {
      if (!mag.is_one()) out += mag.str() + "*";
      out += factors;
    }
  }
  return out;
}

std::string Poly::str() const {
  return str({"x1", "x2", "x3", "x4", "x5"});
}

}  // namespace cartan
