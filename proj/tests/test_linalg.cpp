#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartan/linalg.hpp"
#include "cartan/rng.hpp"

using namespace cartan;

namespace {

QMat rat(std::initializer_list<std::initializer_list<long>> rows) {
  QMat m;
  for (const auto& r : rows) {
    QVec row;
    for (long v : r) row.push_back(Rational(v));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

TEST_CASE("rank pinned values") {
  CHECK(exact_rank(rat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
  CHECK(exact_rank(rat({{0, 0}, {0, 0}})) == 0);
  CHECK(exact_rank(rat({{1, 2}, {2, 4}})) == 1);
  CHECK(exact_rank(QMat{}) == 0);
}

TEST_CASE("kernel basis is deterministic and annihilates") {
  const QMat m = rat({{1, 2, 3, 4}, {0, 0, 1, 1}});
  const auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 2);
  // Free columns ascending, unit entry at the free column.
  CHECK(basis[0][1] == Rational(1));
  CHECK(basis[1][3] == Rational(1));
  for (const auto& v : basis) {
    for (const auto& row : m) {
      Rational dot(0);
      for (std::size_t j = 0; j < row.size(); ++j) dot += row[j] * v[j];
      CHECK(dot.is_zero());
    }
  }
}

TEST_CASE("solve finds particular solutions and detects inconsistency") {
  const QMat a = rat({{1, 1}, {2, 2}});
  const auto none = solve(a, QVec{Rational(1), Rational(3)});
  CHECK_FALSE(none.has_value());
  const auto some = solve(a, QVec{Rational(1), Rational(2)});
  REQUIRE(some.has_value());
  CHECK((*some)[0] + (*some)[1] == Rational(1));
}

TEST_CASE("characteristic polynomial pinned and property checked") {
  // diag(2,3): (l-2)(l-3) = l^2 - 5l + 6.
  const auto cp = char_poly(rat({{2, 0}, {0, 3}}));
  REQUIRE(cp.size() == 3);
  CHECK(cp[0] == Rational(6));
  CHECK(cp[1] == Rational(-5));
  CHECK(cp[2] == Rational(1));
  // Nilpotent: l^3.
  const auto np = char_poly(rat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
  CHECK(np[0].is_zero());
  CHECK(np[1].is_zero());
  CHECK(np[2].is_zero());
  CHECK(np[3] == Rational(1));
  // Property: char(A) has constant term det(A)*(-1)^n = product of eigen
  // structure; test via Cayley-Hamilton on random 4x4 matrices.
  SeededRng rng(7);
  for (int iter = 0; iter < 25; ++iter) {
    QMat a(4, QVec(4, Rational(0)));
    for (auto& row : a) {
      for (auto& v : row) v = rng.next_rational(5, 3);
    }
    const auto p = char_poly(a);
    // Evaluate p(A) by Horner; must vanish.
    QMat acc(4, QVec(4, Rational(0)));
    for (int i = 0; i < 4; ++i) acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = p[4];
    for (int k = 3; k >= 0; --k) {
      QMat next(4, QVec(4, Rational(0)));
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
          Rational s(0);
          for (std::size_t t = 0; t < 4; ++t) s += acc[i][t] * a[t][j];
          next[i][j] = s;
        }
      }
      for (std::size_t i = 0; i < 4; ++i) next[i][i] += p[static_cast<std::size_t>(k)];
      acc = next;
    }
    for (const auto& row : acc) {
      for (const auto& v : row) CHECK(v.is_zero());
    }
  }
}
