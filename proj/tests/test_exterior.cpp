#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartan/forms.hpp"
#include "cartan/linalg.hpp"
#include "cartan/rational.hpp"

#include "test_util.hpp"

using namespace cartan;
using cartan::testutil::random_field;
using cartan::testutil::random_kform;
using cartan::testutil::random_point;
using cartan::testutil::random_poly;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational::from_string("1/3") == Rational(1, 3));
  CHECK(Rational::from_string("-7") == Rational(-7));
  CHECK(Rational::from_string("4/6").str() == "2/3");
  CHECK_THROWS(Rational::from_string("1.5"));
  CHECK_THROWS(Rational::from_string("a/b"));
  CHECK_THROWS(Rational(1, 0));
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
}

TEST_CASE("sqrt upper bound is exact on squares and an upper bound otherwise") {
  CHECK(sqrt_upper_bound(Rational(0)) == Rational(0));
  CHECK(sqrt_upper_bound(Rational(9, 4)) == Rational(3, 2));
  CHECK(sqrt_upper_bound(Rational(49)) == Rational(7));
  SeededRng rng(17);
  for (int i = 0; i < 200; ++i) {
    Rational r = rng.next_rational(50, 7).abs();
    Rational q = sqrt_upper_bound(r);
    CHECK(q * q >= r);
    CHECK(q.sign() >= 0);
  }
  CHECK_THROWS(sqrt_upper_bound(Rational(-1)));
}

TEST_CASE("polynomial arithmetic basics") {
  const Poly x1 = Poly::variable(1);
  const Poly x4 = Poly::variable(4);
  CHECK((x1 + (-x1)).is_zero());
  CHECK(x4.pow(2).derivative(4) == Rational(2) * x4);
  CHECK(x4.pow(2).derivative(1).is_zero());
  Point p;
  p[3] = Rational(2);
  CHECK(x4.pow(3).evaluate(p) == Rational(8));
  CHECK((x1 * x4).total_degree() == 2);
  CHECK(Poly().str() == "0");
  CHECK((Poly(Rational(-3, 2)) * x1).str() == "-3/2*x1");
}

TEST_CASE("multi-index ordering and merge signs") {
  auto [i13, s13] = MultiIndex::from_indices({3, 1});
  CHECK(s13 == -1);
  CHECK(i13.indices() == std::vector<int>{1, 3});
  auto [rep, srep] = MultiIndex::from_indices({2, 2});
  (void)rep;
  CHECK(srep == 0);
  const auto pairs = MultiIndex::all_of_degree(2);
  REQUIRE(pairs.size() == 10);
  // Lexicographic pair order fixes the z-coordinate layout everywhere.
  CHECK(pairs[0].indices() == std::vector<int>{1, 2});
  CHECK(pairs[3].indices() == std::vector<int>{1, 5});
  CHECK(pairs[4].indices() == std::vector<int>{2, 3});
  CHECK(pairs[9].indices() == std::vector<int>{4, 5});
}

TEST_CASE("wedge pinned values") {
  const KForm dx1 = KForm::dx(1);
  const KForm dx2 = KForm::dx(2);
  const KForm dx3 = KForm::dx(3);
  CHECK(wedge(dx1, dx1).is_zero());
  CHECK(wedge(dx1 + dx2, dx2) == wedge(dx1, dx2));
  // Sign normalization: (dx2^dx1)^dx3 = -dx1^dx2^dx3.
  const KForm w21 = wedge(dx2, dx1);
  const KForm lhs = wedge(w21, dx3);
  const KForm rhs = -wedge(wedge(dx1, dx2), dx3);
  CHECK(lhs == rhs);
  // Degree overflow clamps to the zero 5-form.
  const KForm five = wedge(wedge(wedge(dx1, dx2), dx3), wedge(KForm::dx(4), KForm::dx(5)));
  CHECK_FALSE(five.is_zero());
  CHECK(wedge(five, dx1).is_zero());
  CHECK(wedge(five, dx1).degree() == 5);
}

TEST_CASE("exterior derivative pinned values") {
  const KForm a = Poly::variable(1) * KForm::dx(2);
  CHECK(exterior_derivative(a) == wedge(KForm::dx(1), KForm::dx(2)));
  const KForm f = KForm::from_poly(Poly::variable(1).pow(2) * Poly::variable(3));
  CHECK(exterior_derivative(exterior_derivative(f)).is_zero());
  const KForm b = Poly::variable(4).pow(2) * KForm::dx(1);
  const KForm db = exterior_derivative(b);
  CHECK(db == (Rational(2) * Poly::variable(4)) * wedge(KForm::dx(4), KForm::dx(1)));
}

TEST_CASE("lie bracket pinned values") {
  const VectorField e1 = VectorField::basis(1);
  VectorField x1e2 = Poly::variable(1) * VectorField::basis(2);
  CHECK(lie_bracket(e1, x1e2) == VectorField::basis(2));
  SeededRng rng(5);
  const VectorField x = random_field(rng);
  CHECK(lie_bracket(x, x) == VectorField{});
  // Second frame field of the canonical rank-2 model.
  VectorField y = VectorField::basis(1);
  y += Poly::variable(3) * VectorField::basis(2);
  y += Poly::variable(4) * VectorField::basis(3);
  y += Poly::variable(4).pow(2) * VectorField::basis(5);
  VectorField expect = VectorField::basis(3);
  expect += (Rational(2) * Poly::variable(4)) * VectorField::basis(5);
  CHECK(lie_bracket(VectorField::basis(4), y) == expect);
}

TEST_CASE("pairing pinned values") {
  CHECK(pair(KForm::dx(3), VectorField::basis(3)) == Poly(Rational(1)));
  CHECK(pair(KForm::dx(1), VectorField::basis(2)).is_zero());
  KForm alpha = KForm::dx(2) - Poly::variable(3) * KForm::dx(1);
  VectorField x = VectorField::basis(1);
  x += Poly::variable(3) * VectorField::basis(2);
  CHECK(pair(alpha, x).is_zero());
  CHECK_THROWS(pair(wedge(KForm::dx(1), KForm::dx(2)), x));
}

TEST_CASE("evaluation pinned values") {
  Point p;
  p[0] = Rational(3);
  CHECK(evaluate(Poly::variable(1) * KForm::dx(2), p) == Rational(3) * KForm::dx(2));
  const KForm w = wedge(KForm::dx(1), KForm::dx(2));
  CHECK(evaluate(w, p) == w);
  Point q;
  q[3] = Rational(2);
  const KForm v = Poly::variable(4).pow(2) * wedge(KForm::dx(1), KForm::dx(5));
  CHECK(evaluate(v, q) == Rational(4) * wedge(KForm::dx(1), KForm::dx(5)));
}

TEST_CASE("property: d after d vanishes") {
  SeededRng rng(101);
  for (int deg = 0; deg <= 3; ++deg) {
    for (int i = 0; i < 250; ++i) {
      const KForm w = random_kform(rng, deg);
      CHECK(exterior_derivative(exterior_derivative(w)).is_zero());
    }
  }
}

TEST_CASE("property: graded Leibniz rule") {
  SeededRng rng(102);
  for (int i = 0; i < 400; ++i) {
    const int da = static_cast<int>(rng.next_int(0, 2));
    const int db = static_cast<int>(rng.next_int(0, 2));
    const KForm a = random_kform(rng, da);
    const KForm b = random_kform(rng, db);
    KForm lhs = exterior_derivative(wedge(a, b));
    KForm rhs = wedge(exterior_derivative(a), b);
    KForm second = wedge(a, exterior_derivative(b));
    if (da % 2 == 1) second = -second;
    rhs += second;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("property: graded commutativity of wedge") {
  SeededRng rng(103);
  for (int i = 0; i < 400; ++i) {
    const int da = static_cast<int>(rng.next_int(0, 3));
    const int db = static_cast<int>(rng.next_int(0, 3));
    const KForm a = random_kform(rng, da);
    const KForm b = random_kform(rng, db);
    KForm rhs = wedge(b, a);
    if ((da * db) % 2 == 1) rhs = -rhs;
    CHECK(wedge(a, b) == rhs);
  }
}

TEST_CASE("property: bracket antisymmetry and Jacobi") {
  SeededRng rng(104);
  for (int i = 0; i < 120; ++i) {
    const VectorField x = random_field(rng);
    const VectorField y = random_field(rng);
    const VectorField z = random_field(rng);
    CHECK(lie_bracket(x, y) == -lie_bracket(y, x));
    VectorField jac = lie_bracket(x, lie_bracket(y, z));
    jac += lie_bracket(y, lie_bracket(z, x));
    jac += lie_bracket(z, lie_bracket(x, y));
    CHECK(jac == VectorField{});
  }
}

TEST_CASE("property: derivative of a 1-form against the bracket") {
  SeededRng rng(105);
  for (int i = 0; i < 120; ++i) {
    const KForm alpha = random_kform(rng, 1);
    const VectorField x = random_field(rng);
    const VectorField y = random_field(rng);
    const Poly lhs = evaluate_on_fields(exterior_derivative(alpha), {x, y});
    // X(alpha(Y)) - Y(alpha(X)) - alpha([X,Y])
    Poly rhs;
    const Poly ay = pair(alpha, y);
    const Poly ax = pair(alpha, x);
    for (int j = 1; j <= 5; ++j) {
      const std::size_t ji = static_cast<std::size_t>(j - 1);
      rhs += x.c[ji] * ay.derivative(j);
      rhs -= y.c[ji] * ax.derivative(j);
    }
    rhs -= pair(alpha, lie_bracket(x, y));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("evaluate_on_fields agrees with pairing in degree 1") {
  SeededRng rng(106);
  for (int i = 0; i < 100; ++i) {
    const KForm alpha = random_kform(rng, 1);
    const VectorField x = random_field(rng);
    CHECK(evaluate_on_fields(alpha, {x}) == pair(alpha, x));
  }
}
