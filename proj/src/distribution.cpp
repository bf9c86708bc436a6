#include "cartan/distribution.hpp"

#include <stdexcept>

#include "cartan/ratfunc.hpp"

namespace cartan {

namespace {

// Coefficient rows (dx1..dx5) of degree-1 forms, as polynomials.
std::vector<std::vector<Poly>> one_form_rows(const std::vector<KForm>& forms) {
  std::vector<std::vector<Poly>> rows;
  for (const KForm& f : forms) {
    if (f.degree() != 1) throw std::invalid_argument("expected a degree-1 form");
    std::vector<Poly> row;
    for (int i = 1; i <= 5; ++i) {
      row.push_back(f.coefficient(MultiIndex::from_indices({i}).first));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<RatFunc>> to_ratfunc(const std::vector<std::vector<Poly>>& rows) {
  std::vector<std::vector<RatFunc>> out;
  for (const auto& row : rows) {
    std::vector<RatFunc> r;
    for (const Poly& p : row) r.emplace_back(p);
    out.push_back(std::move(r));
  }
  return out;
}

int generic_rank(const std::vector<std::vector<Poly>>& rows) {
  if (rows.empty()) return 0;
  return exact_rank_t(to_ratfunc(rows));
}

QMat evaluate_rows(const std::vector<std::vector<Poly>>& rows, const Point& p) {
  QMat out;
  for (const auto& row : rows) {
    QVec r;
    for (const Poly& poly : row) r.push_back(poly.evaluate(p));
    out.push_back(std::move(r));
  }
  return out;
}

// Coefficient rows of 4-forms in the lex basis of degree-4 indices.
std::vector<std::vector<Poly>> four_form_rows(const std::vector<KForm>& forms) {
  const auto basis = MultiIndex::all_of_degree(4);
  std::vector<std::vector<Poly>> rows;
  for (const KForm& f : forms) {
    std::vector<Poly> row;
    for (const auto& mi : basis) row.push_back(f.coefficient(mi));
    rows.push_back(std::move(row));
  }
  return rows;
}

Poly top_coefficient(const KForm& w) {
  return w.coefficient(MultiIndex::from_mask(31u));
}

// Divides out the rational content and normalizes the overall sign, making
// kernel frames deterministic and denominator-free.
void normalize_content(std::array<Poly, 5>& comp) {
  mpz_class g = 0, l = 1;
  for (const Poly& p : comp) {
    for (const auto& [e, c] : p.terms()) {
      (void)e;
      mpz_class n = c.raw().get_num();
      mpz_abs(n.get_mpz_t(), n.get_mpz_t());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den().get_mpz_t());
    }
  }
  if (g == 0) return;
  const Rational scale = Rational::from_mpq(mpq_class(l, g));
  for (Poly& p : comp) p = scale * p;
  for (const Poly& p : comp) {
    if (p.is_zero()) continue;
    if (p.terms().begin()->second.sign() < 0) {
      for (Poly& q : comp) q = -q;
    }
    break;
  }
}

}  // namespace

DerivedFlagReport derived_flag(const Frame& frame, FlagMode mode, int max_depth,
                               const std::vector<Point>& points) {
  if (frame.fields.empty()) throw std::invalid_argument("derived_flag: empty frame");
  if (max_depth < 1 || max_depth > 6)
    throw std::invalid_argument("derived_flag: depth must be in 1..6");

  std::vector<VectorField> gens = frame.fields;
  std::vector<int> depth_of(gens.size(), 1);
  for (int level = 2; level <= max_depth; ++level) {
    const std::size_t prev = gens.size();
    auto push = [&](VectorField b) {
      bool zero = true;
      for (const Poly& comp : b.c) {
        if (!comp.is_zero()) {
          zero = false;
          break;
        }
      }
      if (zero) return;
      gens.push_back(std::move(b));
      depth_of.push_back(level);
      if (gens.size() > 800)
        throw std::invalid_argument("derived_flag: generating set too large");
    };
    if (mode == FlagMode::weak) {
      for (const VectorField& x : frame.fields) {
        for (std::size_t j = 0; j < prev; ++j) {
          if (depth_of[j] != level - 1) continue;
          push(lie_bracket(x, gens[j]));
        }
      }
    } else {
      for (std::size_t i = 0; i < prev; ++i) {
        for (std::size_t j = i + 1; j < prev; ++j) {
          if (std::max(depth_of[i], depth_of[j]) != level - 1) continue;
          push(lie_bracket(gens[i], gens[j]));
        }
      }
    }
  }

  DerivedFlagReport report;
  report.mode = mode;
  report.depth = max_depth;
  report.points = points;
  for (const Point& p : points) {
    QMat rows;
    std::vector<int> ranks;
    std::size_t next = 0;
    for (int level = 1; level <= max_depth; ++level) {
      while (next < gens.size() && depth_of[next] <= level) {
        const auto v = gens[next].evaluate(p);
        rows.emplace_back(v.begin(), v.end());
        ++next;
      }
      ranks.push_back(exact_rank(rows));
    }
    for (std::size_t l = 1; l < ranks.size(); ++l) {
      if (ranks[l] < ranks[l - 1])
        throw std::logic_error("derived_flag: ranks decreased along the flag");
    }
    report.ranks.push_back(std::move(ranks));
  }
  return report;
}

CoframeReport is_cartan_coframe(const Coframe& c, const std::vector<Point>& points) {
  if (c.forms.size() != 3) throw std::invalid_argument("is_cartan_coframe: need 3 forms");
  const auto rows = one_form_rows(c.forms);
  const KForm& a1 = c.forms[0];
  const KForm& a2 = c.forms[1];
  const KForm& a3 = c.forms[2];
  const KForm a12 = wedge(a1, a2);
  const KForm a123 = wedge(a12, a3);
  std::array<KForm, 3> w{wedge(a123, exterior_derivative(a1)),
                         wedge(a123, exterior_derivative(a2)),
                         wedge(a123, exterior_derivative(a3))};
  const std::vector<KForm> v{wedge(a12, exterior_derivative(a1)),
                             wedge(a12, exterior_derivative(a2))};
  const auto vrows = four_form_rows(v);

  CoframeReport report;
  auto generic_fail = [&](const std::string& label) {
    report.generic_ok = false;
    report.generic_failures.push_back(label);
  };
  if (generic_rank(rows) != 3) generic_fail("alphas dependent");
  if (!w[0].is_zero()) generic_fail("alpha1^alpha2^alpha3^d(alpha1) != 0");
  if (!w[1].is_zero()) generic_fail("alpha1^alpha2^alpha3^d(alpha2) != 0");
  if (w[2].is_zero()) generic_fail("alpha1^alpha2^alpha3^d(alpha3) == 0");
  if (generic_rank(vrows) != 2) generic_fail("associated 4-forms dependent");

  const std::array<Poly, 3> wtop{top_coefficient(w[0]), top_coefficient(w[1]),
                                 top_coefficient(w[2])};
  for (const Point& p : points) {
    PointCheck pc;
    pc.point = p;
    auto fail = [&](const std::string& label) {
      pc.ok = false;
      pc.failures.push_back(label);
    };
    if (exact_rank(evaluate_rows(rows, p)) != 3) fail("alphas dependent");
    if (!wtop[0].evaluate(p).is_zero()) fail("alpha1^alpha2^alpha3^d(alpha1) != 0");
    if (!wtop[1].evaluate(p).is_zero()) fail("alpha1^alpha2^alpha3^d(alpha2) != 0");
    if (wtop[2].evaluate(p).is_zero()) fail("alpha1^alpha2^alpha3^d(alpha3) == 0");
    if (exact_rank(evaluate_rows(vrows, p)) != 2) fail("associated 4-forms dependent");
    report.points.push_back(std::move(pc));
  }
  return report;
}

CoframeReport is_35_coframe(const Coframe& c, const std::vector<Point>& points) {
  if (c.forms.size() != 2) throw std::invalid_argument("is_35_coframe: need 2 forms");
  const auto rows = one_form_rows(c.forms);
  const KForm a12 = wedge(c.forms[0], c.forms[1]);
  const std::vector<KForm> v{wedge(a12, exterior_derivative(c.forms[0])),
                             wedge(a12, exterior_derivative(c.forms[1]))};
  const auto vrows = four_form_rows(v);

  CoframeReport report;
  if (generic_rank(rows) != 2) {
    report.generic_ok = false;
    report.generic_failures.push_back("alphas dependent");
  }
  if (generic_rank(vrows) != 2) {
    report.generic_ok = false;
    report.generic_failures.push_back("associated 4-forms dependent");
  }
  for (const Point& p : points) {
    PointCheck pc;
    pc.point = p;
    if (exact_rank(evaluate_rows(rows, p)) != 2) {
      pc.ok = false;
      pc.failures.push_back("alphas dependent");
    }
    if (exact_rank(evaluate_rows(vrows, p)) != 2) {
      pc.ok = false;
      pc.failures.push_back("associated 4-forms dependent");
    }
    report.points.push_back(std::move(pc));
  }
  return report;
}

StructureReport check_structure_equations(const std::vector<KForm>& coframe5,
                                          const std::vector<Point>& points) {
  if (coframe5.size() != 5)
    throw std::invalid_argument("check_structure_equations: need 5 forms");
  const auto rows = one_form_rows(coframe5);
  const KForm& a1 = coframe5[0];
  const KForm& a2 = coframe5[1];
  const KForm& a3 = coframe5[2];
  const KForm& a4 = coframe5[3];
  const KForm& a5 = coframe5[4];
  const KForm a12 = wedge(a1, a2);
  const std::array<KForm, 3> defects{
      wedge(exterior_derivative(a1) - wedge(a3, a4), a12),
      wedge(exterior_derivative(a2) - wedge(a3, a5), a12),
      wedge(exterior_derivative(a3) - wedge(a4, a5), wedge(a12, a3))};

  StructureReport report;
  for (int i = 0; i < 3; ++i)
    report.generic_congruences[static_cast<std::size_t>(i)] =
        defects[static_cast<std::size_t>(i)].is_zero();

  for (const Point& p : points) {
    PointCheck pc;
    pc.point = p;
    if (exact_rank(evaluate_rows(rows, p)) != 5) {
      pc.ok = false;
      pc.failures.push_back("not a coframe at this point");
    }
    for (int i = 0; i < 3; ++i) {
      const KForm at_p = evaluate(defects[static_cast<std::size_t>(i)], p);
      if (!at_p.is_zero()) {
        pc.ok = false;
        pc.failures.push_back("congruence-" + std::to_string(i + 1) + " defect != 0");
      }
    }
    report.points.push_back(std::move(pc));
  }
  return report;
}

std::vector<std::array<Rational, 5>> pointwise_kernel(const std::vector<KForm>& forms,
                                                      const Point& p) {
  const auto rows = evaluate_rows(one_form_rows(forms), p);
  std::vector<std::array<Rational, 5>> out;
  if (rows.empty()) {
    for (int i = 0; i < 5; ++i) {
      std::array<Rational, 5> v{};
      v[static_cast<std::size_t>(i)] = Rational(1);
      out.push_back(v);
    }
    return out;
  }
  for (const auto& v : kernel_basis(rows)) {
    std::array<Rational, 5> a{};
    for (std::size_t i = 0; i < 5; ++i) a[i] = v[i];
    out.push_back(a);
  }
  return out;
}

Rational two_form_on_vectors(const KForm& w, const std::array<Rational, 5>& u,
                             const std::array<Rational, 5>& v) {
  if (w.degree() != 2) throw std::invalid_argument("two_form_on_vectors: need a 2-form");
  Rational out(0);
  for (const auto& [mi, poly] : w.terms()) {
    const auto idx = mi.indices();
    const std::size_t j = static_cast<std::size_t>(idx[0] - 1);
    const std::size_t k = static_cast<std::size_t>(idx[1] - 1);
    out += poly.constant_value() * (u[j] * v[k] - u[k] * v[j]);
  }
  return out;
}

namespace {

// Restriction coordinates of a constant 2-form on span(basis), pair order
// (01),(02),(12),... of the basis vectors.
QVec restriction_coords(const KForm& w, const std::vector<std::array<Rational, 5>>& basis) {
  QVec out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      out.push_back(two_form_on_vectors(w, basis[i], basis[j]));
    }
  }
  return out;
}

}  // namespace

std::vector<PointCheck> check_almost_cartan(const AlmostCartanTuple& t,
                                            const std::vector<Point>& points) {
  for (const KForm& a : t.alphas) {
    if (a.degree() != 1) throw std::invalid_argument("check_almost_cartan: alphas must be 1-forms");
  }
  for (const KForm& w : t.omegas) {
    if (w.degree() != 2) throw std::invalid_argument("check_almost_cartan: omegas must be 2-forms");
  }
  const std::vector<KForm> alphas3(t.alphas.begin(), t.alphas.end());
  const std::vector<KForm> alphas2{t.alphas[0], t.alphas[1]};
  std::vector<PointCheck> out;
  for (const Point& p : points) {
    PointCheck pc;
    pc.point = p;
    auto fail = [&](const std::string& label) {
      pc.ok = false;
      pc.failures.push_back(label);
    };
    const auto dbasis = pointwise_kernel(alphas3, p);
    const auto ebasis = pointwise_kernel(alphas2, p);
    const std::array<KForm, 3> w{evaluate(t.omegas[0], p), evaluate(t.omegas[1], p),
                                 evaluate(t.omegas[2], p)};
    if (dbasis.size() != 2) {
      fail("rank(alpha1..alpha3) != 3");
    } else {
      if (!two_form_on_vectors(w[0], dbasis[0], dbasis[1]).is_zero() ||
          !two_form_on_vectors(w[1], dbasis[0], dbasis[1]).is_zero())
        fail("(1)-(i)");
      if (two_form_on_vectors(w[2], dbasis[0], dbasis[1]).is_zero()) fail("(1)-(ii)");
    }
    if (ebasis.size() != 3) {
      fail("rank(alpha1,alpha2) != 2");
    } else {
      const QMat m{restriction_coords(w[0], ebasis), restriction_coords(w[1], ebasis)};
      if (exact_rank(m) != 2) fail("(2)");
    }
    out.push_back(std::move(pc));
  }
  return out;
}

std::vector<PointCheck> check_almost_35(const Almost35Tuple& t,
                                        const std::vector<Point>& points) {
  for (const KForm& a : t.alphas) {
    if (a.degree() != 1) throw std::invalid_argument("check_almost_35: alphas must be 1-forms");
  }
  for (const KForm& w : t.omegas) {
    if (w.degree() != 2) throw std::invalid_argument("check_almost_35: omegas must be 2-forms");
  }
  const std::vector<KForm> alphas2{t.alphas[0], t.alphas[1]};
  std::vector<PointCheck> out;
  for (const Point& p : points) {
    PointCheck pc;
    pc.point = p;
    const auto ebasis = pointwise_kernel(alphas2, p);
    if (ebasis.size() != 3) {
      pc.ok = false;
      pc.failures.push_back("rank(alpha1,alpha2) != 2");
    } else {
      const QMat m{restriction_coords(evaluate(t.omegas[0], p), ebasis),
                   restriction_coords(evaluate(t.omegas[1], p), ebasis)};
      if (exact_rank(m) != 2) {
        pc.ok = false;
        pc.failures.push_back("restricted 2-forms dependent");
      }
    }
    out.push_back(std::move(pc));
  }
  return out;
}

AlmostCartanTuple build_almost_cartan_from_splitting(const KForm& beta1, const KForm& beta2,
                                                     const KForm& gamma, const KForm& alpha1,
                                                     const KForm& alpha2) {
  for (const KForm* f : {&beta1, &beta2, &gamma, &alpha1, &alpha2}) {
    if (f->degree() != 1)
      throw std::invalid_argument("build_almost_cartan_from_splitting: need 1-forms");
  }
  AlmostCartanTuple t;
  t.alphas = {alpha1, alpha2, gamma};
  t.omegas = {wedge(gamma, beta1), wedge(gamma, beta2), wedge(beta1, beta2)};
  return t;
}

AlmostCartanTuple induced_almost_cartan(const Coframe& c) {
  if (c.forms.size() != 3) throw std::invalid_argument("induced_almost_cartan: need 3 forms");
  AlmostCartanTuple t;
  t.alphas = {c.forms[0], c.forms[1], c.forms[2]};
  t.omegas = {exterior_derivative(c.forms[0]), exterior_derivative(c.forms[1]),
              exterior_derivative(c.forms[2])};
  return t;
}

Frame coframe_kernel_frame(const Coframe& c) {
  Frame frame;
  if (c.forms.empty()) {
    for (int i = 1; i <= 5; ++i) frame.fields.push_back(VectorField::basis(i));
    return frame;
  }
  const auto rows = to_ratfunc(one_form_rows(c.forms));
  for (const auto& v : kernel_basis(rows)) {
    std::array<Poly, 5> comp;
    for (std::size_t i = 0; i < 5; ++i) {
      Poly cleared = v[i].num;
      for (std::size_t j = 0; j < 5; ++j) {
        if (j == i) continue;
        cleared = cleared * v[j].den;
      }
      comp[i] = cleared;
    }
    normalize_content(comp);
    VectorField x;
    x.c = comp;
    frame.fields.push_back(std::move(x));
  }
  return frame;
}

}  // namespace cartan
