#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wboson/zhu.hpp"

using namespace wb;

namespace {
FockVector omegaOf(int p) {
  return virasoro(-2, FockVector::vacuum(latticeSector(p, 0)));
}
}  // namespace

TEST_CASE("star product basics") {
  for (int p : {2, 3}) {
    FockVector vac = FockVector::vacuum(latticeSector(p, 0));
    FockVector om = omegaOf(p);
    CHECK(zhuStar(vac, om) == om);
    CHECK(zhuStar(om, vac) == om);
  }
}

TEST_CASE("word reduction") {
  int p = 2;
  FockVector om = omegaOf(p);
  Poly1 x = Poly1::x();
  CHECK(reduceWords(expressInPbw(om)) == x);
  CHECK(reduceWords(expressInPbw(zhuStar(om, om))) == x * x);
  CHECK(reduceWords({}).isZero());
}

TEST_CASE("circle products reduce to zero") {
  for (int p : {2, 3}) {
    FockVector vac = FockVector::vacuum(latticeSector(p, 0));
    FockVector om = omegaOf(p);
    for (const FockVector& b : {vac, om, pbwWordVector(p, {3, 2})})
      CHECK(reduceWords(expressInPbw(zhuCirc(om, b))).isZero());
  }
}

TEST_CASE("curve constants") {
  CHECK(curveConstant(2) == Rational(128, 9));
  CHECK(curveConstant(3) == Rational(432, 25));
  CHECK(curveU(2).evaluate(Rational(3)) == Rational(3, 8));
  CHECK(curveV(2).evaluate(Rational(3)) == Rational(1));
  CHECK(curveV(2).evaluate(Rational(1)) == Rational(0));
}

TEST_CASE("g routes agree") {
  for (int p : {2, 3}) {
    GRoutes r = computeGRoutes(p);
    CHECK(r.interpolated == r.algebraic);
    CHECK(r.interpolated == closedFormG(p));
  }
  // p=2 closed form: (128/9) x^2 (x + 1/8).
  Poly1 x = Poly1::x();
  CHECK(closedFormG(2) ==
        Rational(128, 9) * (x * x * x) + Rational(16, 9) * (x * x));
}

TEST_CASE("curve assembly and symmetry") {
  for (int p : {2, 3, 4, 5}) {
    CurveData cd = curve(p, 3);
    CHECK(cd.P.evaluate(cd.u, cd.v).isZero());
    Poly1 mirror = Poly1(Rational(2 * (p - 1))) - Poly1::x();
    CHECK(cd.u.evaluate(mirror) == cd.u);
    CHECK(cd.v.evaluate(mirror) == Rational(-1) * cd.v);
    CHECK(cd.P.yCoefficient(2) == Poly1(Rational(1)));
    CHECK(cd.P.yCoefficient(0) == -cd.g);
  }
}

TEST_CASE("top level eigenvalues") {
  for (int p : {2, 3}) {
    FockVector om = omegaOf(p);
    FockVector H = makeGenerators(p).H;
    CHECK(topLevelEvalSym(om) == curveU(p));
    CHECK(topLevelEvalSym(H) == curveV(p));
    CHECK(topLevelEvalSym(H) == binomialPoly(2 * p - 1));
    for (int j = 0; j <= 2; ++j) {
      Rational t(2 * j + 1, 2);
      CHECK(topLevelEvalAt(om, t) == curveU(p).evaluate(t));
      CHECK(topLevelEvalAt(H, t) == curveV(p).evaluate(t));
    }
  }
}

TEST_CASE("classification samples lie on the curve") {
  for (int p : {2, 3}) {
    auto table = classify(p);
    REQUIRE((int)table.size() == 2 * p + 1);
    Poly2 P = curveP(p);
    for (const auto& s : table)
      CHECK(P.evaluate(s.x, s.y).isZero());
  }
  auto table = classify(2);
  CHECK(table[3].x == Rational(3, 8));
  CHECK(table[3].y == Rational(1));
}

TEST_CASE("representative independence of the reduction") {
  Generators g = makeGenerators(2);
  FockVector hh = zhuStar(g.H, g.H);
  CHECK(reduceWords(expressInPbw(hh, false)) ==
        reduceWords(expressInPbw(hh, true)));
}
