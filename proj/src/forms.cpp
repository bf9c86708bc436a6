#include "cartan/forms.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cartan {

MultiIndex MultiIndex::from_mask(unsigned mask) {
  if (mask >= 32u) throw std::invalid_argument("MultiIndex: mask out of range");
  return MultiIndex(mask);
}

std::pair<MultiIndex, int> MultiIndex::from_indices(const std::vector<int>& idx) {
  unsigned mask = 0;
  int sign = 1;
  for (std::size_t pos = 0; pos < idx.size(); ++pos) {
    const int i = idx[pos];
    if (i < 1 || i > 5) throw std::invalid_argument("MultiIndex: index out of range");
    const unsigned bit = 1u << (i - 1);
    if (mask & bit) return {MultiIndex(0), 0};
    // Parity of the number of already-placed indices larger than i.
    const unsigned larger = mask >> i;
    if (std::popcount(larger) % 2 == 1) sign = -sign;
    mask |= bit;
  }
  return {MultiIndex(mask), sign};
}

std::vector<MultiIndex> MultiIndex::all_of_degree(int k) {
  std::vector<MultiIndex> out;
  for (unsigned mask = 0; mask < 32u; ++mask) {
    if (std::popcount(mask) == k) out.push_back(MultiIndex(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int MultiIndex::degree() const { return std::popcount(mask_); }

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 5; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

int MultiIndex::merge_sign(const MultiIndex& a, const MultiIndex& b) {
  if (a.mask_ & b.mask_) return 0;
  int swaps = 0;
  for (int j = 1; j <= 5; ++j) {
    if (!b.contains(j)) continue;
    swaps += std::popcount(a.mask_ >> j);  // elements of a larger than j
  }
  return swaps % 2 == 0 ? 1 : -1;
}

MultiIndex MultiIndex::merged(const MultiIndex& a, const MultiIndex& b) {
  if (a.mask_ & b.mask_) throw std::invalid_argument("MultiIndex: overlapping merge");
  return MultiIndex(a.mask_ | b.mask_);
}

bool operator<(const MultiIndex& a, const MultiIndex& b) {
  const std::vector<int> ia = a.indices();
  const std::vector<int> ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

std::string MultiIndex::str() const {
  std::string out = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

KForm::KForm(int degree) : degree_(degree) {
  if (degree < 0 || degree > 5) throw std::invalid_argument("KForm: degree out of range");
}

KForm KForm::from_poly(const Poly& p) {
  KForm out(0);
  out.add(MultiIndex(), p);
  return out;
}

KForm KForm::dx(int i) {
  KForm out(1);
  auto [mi, sign] = MultiIndex::from_indices({i});
  (void)sign;
  out.add(mi, Poly(Rational(1)));
  return out;
}

KForm KForm::term(const MultiIndex& mi, const Poly& coeff) {
  KForm out(mi.degree());
  out.add(mi, coeff);
  return out;
}

Poly KForm::coefficient(const MultiIndex& mi) const {
  auto it = terms_.find(mi);
  return it == terms_.end() ? Poly() : it->second;
}

void KForm::add(const MultiIndex& mi, const Poly& p) {
  if (mi.degree() != degree_) throw std::invalid_argument("KForm: index degree mismatch");
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mi, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

KForm KForm::operator-() const {
  KForm out(degree_);
  for (const auto& [mi, p] : terms_) out.terms_.emplace(mi, -p);
  return out;
}

KForm& KForm::operator+=(const KForm& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("KForm: degree mismatch in sum");
  for (const auto& [mi, p] : o.terms_) add(mi, p);
  return *this;
}

KForm& KForm::operator-=(const KForm& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("KForm: degree mismatch in sum");
  for (const auto& [mi, p] : o.terms_) add(mi, -p);
  return *this;
}

KForm operator*(const Poly& p, const KForm& w) {
  KForm out(w.degree());
  for (const auto& [mi, q] : w.terms()) {
    Poly prod = p * q;
    if (!prod.is_zero()) out += KForm::term(mi, prod);
  }
  return out;
}

KForm operator*(const Rational& c, const KForm& w) { return Poly(c) * w; }

std::string KForm::str() const {
  if (terms_.empty()) return "0[deg " + std::to_string(degree_) + "]";
  std::string out;
  for (const auto& [mi, p] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + p.str() + ")";
    if (mi.degree() > 0) out += "*dx" + mi.str();
  }
  return out;
}

VectorField VectorField::basis(int i) {
  if (i < 1 || i > 5) throw std::invalid_argument("VectorField: index out of range");
  VectorField out;
  out.c[static_cast<std::size_t>(i - 1)] = Poly(Rational(1));
  return out;
}

std::array<Rational, 5> VectorField::evaluate(const Point& p) const {
  std::array<Rational, 5> out;
  for (std::size_t i = 0; i < 5; ++i) out[i] = c[i].evaluate(p);
  return out;
}

VectorField VectorField::operator-() const {
  VectorField out;
  for (std::size_t i = 0; i < 5; ++i) out.c[i] = -c[i];
  return out;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  for (std::size_t i = 0; i < 5; ++i) c[i] += o.c[i];
  return *this;
}

VectorField operator*(const Poly& p, const VectorField& x) {
  VectorField out;
  for (std::size_t i = 0; i < 5; ++i) out.c[i] = p * x.c[i];
  return out;
}

std::string VectorField::str() const {
  std::string out;
  for (std::size_t i = 0; i < 5; ++i) {
    if (c[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c[i].str() + ")*e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

KForm wedge(const KForm& a, const KForm& b) {
  const int deg = a.degree_ + b.degree_;
  if (deg > 5) return KForm(5);
  KForm out(deg);
  for (const auto& [mia, pa] : a.terms_) {
    for (const auto& [mib, pb] : b.terms_) {
      const int sign = MultiIndex::merge_sign(mia, mib);
      if (sign == 0) continue;
      Poly coeff = pa * pb;
      if (sign < 0) coeff = -coeff;
      out.add(MultiIndex::merged(mia, mib), coeff);
    }
  }
  return out;
}

KForm exterior_derivative(const KForm& a) {
  if (a.degree_ == 5) return KForm(5);
  KForm out(a.degree_ + 1);
  for (const auto& [mi, p] : a.terms_) {
    for (int i = 1; i <= 5; ++i) {
      if (mi.contains(i)) continue;
      Poly dp = p.derivative(i);
      if (dp.is_zero()) continue;
      const MultiIndex di = MultiIndex::from_mask(1u << (i - 1));
      const int sign = MultiIndex::merge_sign(di, mi);
      if (sign < 0) dp = -dp;
      out.add(MultiIndex::merged(di, mi), dp);
    }
  }
  return out;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  VectorField out;
  for (std::size_t i = 0; i < 5; ++i) {
    Poly comp;
    for (int j = 1; j <= 5; ++j) {
      const std::size_t ji = static_cast<std::size_t>(j - 1);
      comp += x.c[ji] * y.c[i].derivative(j);
      comp -= y.c[ji] * x.c[i].derivative(j);
    }
    out.c[i] = comp;
  }
  return out;
}

Poly pair(const KForm& alpha, const VectorField& x) {
  if (alpha.degree() != 1) throw std::invalid_argument("pair: form degree must be 1");
  Poly out;
  for (const auto& [mi, p] : alpha.terms()) {
    const int i = mi.indices().front();
    out += p * x.c[static_cast<std::size_t>(i - 1)];
  }
  return out;
}

KForm evaluate(const KForm& a, const Point& p) {
  KForm out(a.degree_);
  for (const auto& [mi, poly] : a.terms_) {
    const Rational v = poly.evaluate(p);
    if (!v.is_zero()) out.add(mi, Poly(v));
  }
  return out;
}

Poly evaluate_on_fields(const KForm& w, const std::vector<VectorField>& fields) {
  const int k = w.degree();
  if (static_cast<int>(fields.size()) != k)
    throw std::invalid_argument("evaluate_on_fields: field count must equal degree");
  if (k == 0) return w.coefficient(MultiIndex());
  Poly out;
  for (const auto& [mi, coeff] : w.terms()) {
    const std::vector<int> idx = mi.indices();
    // det of the k x k matrix M[r][c] = component idx[c] of field r.
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
    Poly det;
    // Leibniz expansion; k <= 5 keeps this tiny.
    do {
      int sign = 1;
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) sign = -sign;
        }
      }
      Poly prod(Rational(1));
      for (int r = 0; r < k; ++r) {
        const int col = perm[static_cast<std::size_t>(r)];
        prod = prod * fields[static_cast<std::size_t>(r)]
                          .c[static_cast<std::size_t>(idx[static_cast<std::size_t>(col)] - 1)];
      }
      if (sign < 0) prod = -prod;
      det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out += coeff * det;
  }
  return out;
}

}  // namespace cartan
