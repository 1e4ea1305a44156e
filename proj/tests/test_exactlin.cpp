#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wboson/linalg.hpp"
#include "wboson/poly.hpp"
#include "wboson/rational.hpp"

using namespace wb;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational(4, -6).str() == "-2/3");
  CHECK(Rational(7, 1).str() == "7");
  CHECK(Rational::fromString("-2/3") == Rational(-2, 3));
  CHECK(Rational::fromString("5") == Rational(5));
  CHECK_THROWS(Rational(1, 0));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
}

TEST_CASE("binomials and factorials") {
  CHECK(factorialZ(5) == mpz_class(120));
  CHECK(binomialNat(5, 2) == Rational(10));
  CHECK(binomialNat(3, 0) == Rational(1));
  CHECK(binomialNat(2, 5) == Rational(0));
  // Generalized binomial at negative upper index: C(-3,2) = 6.
  CHECK(binomialGen(-3, 2) == Rational(6));
  CHECK(binomialGen(-1, 3) == Rational(-1));
}

TEST_CASE("univariate polynomials") {
  Poly1 x = Poly1::x();
  Poly1 q = x * x + Poly1(Rational(1, 2));
  CHECK(q.evaluate(Rational(3, 2)) == Rational(11, 4));
  // Composition: (x + 1) o x^2 = x^2 + 1.
  Poly1 shift = x + Poly1(Rational(1));
  CHECK(shift.evaluate(x * x) == x * x + Poly1(Rational(1)));
  // C(t, 2) = t(t-1)/2.
  CHECK(binomialPoly(2).evaluate(Rational(5)) == Rational(10));
  CHECK(binomialPoly(3).evaluate(Rational(-1)) == Rational(-1));
}

TEST_CASE("interpolation recovers a quadratic") {
  Poly1 x = Poly1::x();
  Poly1 q = Rational(2) * (x * x) - x + Poly1(Rational(7));
  std::vector<std::pair<Rational, Rational>> pts;
  for (int t = 0; t < 3; ++t)
    pts.push_back({Rational(t), q.evaluate(Rational(t))});
  CHECK(interpolate(pts) == q);
}

TEST_CASE("bivariate polynomials and division in y") {
  Poly1 x = Poly1::x();
  Poly2 P = Poly2::y() * Poly2::y() - Poly2::fromX(x * x * x);
  CHECK(P.yCoefficient(2) == Poly1(Rational(1)));
  CHECK(P.yCoefficient(0) == -(x * x * x));
  CHECK(P.evaluate(Rational(4), Rational(8)) == Rational(0));

  Poly2 K = Poly2::fromX(x + Poly1(Rational(1))) * P +
            Poly2::fromX(x) * Poly2::y() + Poly2::fromX(Poly1(Rational(3)));
  auto [q, r] = divideInY(K, P);
  CHECK(q == Poly2::fromX(x + Poly1(Rational(1))));
  CHECK(r == Poly2::fromX(x) * Poly2::y() + Poly2::fromX(Poly1(Rational(3))));
  CHECK_THROWS(divideInY(K, Poly2::fromX(x) * Poly2::y() * Poly2::y()));
}

TEST_CASE("sparse matrix rank and nullspace") {
  SparseMatrix m(2, 2);
  m.set(0, 0, Rational(1));
  m.set(0, 1, Rational(2));
  m.set(1, 0, Rational(2));
  m.set(1, 1, Rational(4));
  CHECK(rank(m) == 1);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  // Kernel vector is a multiple of (-2, 1).
  CHECK(ns[0][0] * Rational(1) == Rational(-2) * ns[0][1]);
  CHECK_THROWS(m.set(2, 0, Rational(1)));
}

TEST_CASE("sparse solve with free variables pinned to zero") {
  SparseMatrix m(2, 3);
  m.set(0, 0, Rational(1));
  m.set(0, 2, Rational(1));
  m.set(1, 1, Rational(2));
  auto x = solve(m, {Rational(3), Rational(4)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(3));
  CHECK((*x)[1] == Rational(2));
  CHECK((*x)[2] == Rational(0));

  SparseMatrix bad(2, 1);
  bad.set(0, 0, Rational(1));
  bad.set(1, 0, Rational(1));
  CHECK(!solve(bad, {Rational(0), Rational(1)}).has_value());
}

TEST_CASE("span builder") {
  SpanBuilder sb(3);
  CHECK(sb.add({Rational(1), Rational(0), Rational(1)}));
  CHECK(sb.add({Rational(0), Rational(1), Rational(0)}));
  CHECK(!sb.add({Rational(2), Rational(3), Rational(2)}));
  CHECK(sb.rank() == 2);
  CHECK(sb.contains({Rational(1), Rational(1), Rational(1)}));
  CHECK(!sb.contains({Rational(0), Rational(0), Rational(1)}));
}
