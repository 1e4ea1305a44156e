#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wboson/fock.hpp"
#include "wboson/partition.hpp"
#include "wboson/textform.hpp"

using namespace wb;

TEST_CASE("partition enumeration and ordering") {
  CHECK(partitionsOf(0).size() == 1);
  CHECK(partitionsOf(3).size() == 3);
  CHECK(partitionsOf(6).size() == 11);
  PartLess less;
  CHECK(less({3}, {2, 1}));
  CHECK(less({2, 1}, {1, 1, 1}));
  CHECK(!less({1, 1, 1}, {2, 1}));
  CHECK(partitionStr({3, 1, 1}) == "b(-3)b(-1)^2");
  CHECK(partitionStr({}) == "1");
  CHECK(level({4, 2, 1}) == 7);
}

TEST_CASE("model parameters and sector weights") {
  CHECK_THROWS(ModelParams::make(1));
  CHECK(ModelParams::make(2).centralCharge == Rational(-2));
  CHECK(ModelParams::make(3).centralCharge == Rational(-7));
  for (int p : {2, 3, 5}) {
    // e^{-alpha} has weight 2p-1, e^{alpha} weight 1, e^{-beta} weight 1.
    CHECK(latticeSector(p, -p).delta == Rational(2 * p - 1));
    CHECK(latticeSector(p, p).delta == Rational(1));
    CHECK(latticeSector(p, -1).delta == Rational(1));
    CHECK(latticeSector(p, 0).delta == Rational(0));
  }
  // Generic sector weight u(t) = t(t - 2(p-1)) / (4p).
  Sector<Rational> s = continuousSector<Rational>(3, Rational(5));
  CHECK(s.delta == Rational(5 * (5 - 4), 12));
}

TEST_CASE("vector arithmetic and grading") {
  Sector<Rational> s = latticeSector(2, 0);
  FockVector v(s);
  v.addTerm({2}, Rational(1, 2));
  v.addTerm({1, 1}, Rational(-1));
  CHECK(v.coeff({2}) == Rational(1, 2));
  CHECK(v.coeff({3}) == Rational(0));
  CHECK(v.maxLevel() == 2);
  CHECK(v.levelComponent(2) == v);
  CHECK(v.levelComponent(1).isZero());
  FockVector w = v + v;
  CHECK(w.coeff({1, 1}) == Rational(-2));
  CHECK((v - v).isZero());
  CHECK(Rational(2) * v == w);
}

TEST_CASE("heisenberg modes") {
  int p = 2;
  FockVector vac = FockVector::vacuum(latticeSector(p, 0));
  // [b(1), b(-1)] 1 = (2/p) 1.
  CHECK(heis(1, heis(-1, vac)) == Rational(2, p) * vac);
  CHECK(heis(2, heis(-1, vac)).isZero());
  // b(2) b(-2)^2 1 = 2 (4/p) b(-2) 1.
  FockVector m2 = heis(-2, heis(-2, vac));
  CHECK(heis(2, m2) == Rational(8, p) * heis(-2, vac));
  // Charge sector eigenvalue of b(0).
  FockVector e = FockVector::vacuum(latticeSector(p, 3));
  CHECK(heis(0, e) == Rational(2 * 3, p) * e);
}

TEST_CASE("virasoro modes") {
  int p = 2;
  FockVector vac = FockVector::vacuum(latticeSector(p, 0));
  FockVector om = virasoro(-2, vac);
  // omega = (p/4) b(-1)^2 1 + ((p-1)/2) b(-2) 1.
  CHECK(om.coeff({1, 1}) == Rational(p, 4));
  CHECK(om.coeff({2}) == Rational(p - 1, 2));
  CHECK(virasoro(-1, vac).isZero());
  CHECK(virasoro(0, om) == Rational(2) * om);
  CHECK(virasoro(1, om).isZero());
  // L(2) omega = (c/2) 1.
  CHECK(virasoro(2, om) == (ModelParams::make(p).centralCharge / Rational(2)) * vac);
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n)
      CHECK(virasoroBracketCheck(m, n, om));
}

TEST_CASE("symbolic coefficients in the generic sector") {
  int p = 3;
  Sector<Poly1> s = continuousSector<Poly1>(p, Poly1::x());
  FockVec<Poly1> v = FockVec<Poly1>::vacuum(s);
  CHECK(virasoro(1, v).isZero());
  Poly1 x = Poly1::x();
  Poly1 u = Rational(1, 4 * p) * (x * x - Rational(2 * (p - 1)) * x);
  CHECK(virasoro(0, v) == u * v);
}

TEST_CASE("canonical text form round trip") {
  FockVector v(latticeSector(2, -1));
  v.addTerm({2, 1}, Rational(-3, 2));
  v.addTerm({5}, Rational(1));
  std::string s = fockVectorStr(v);
  CHECK(parseFockVector(s, 2) == v);
  FockVector zero(latticeSector(2, 4));
  CHECK(parseFockVector(fockVectorStr(zero), 2) == zero);
  CHECK_THROWS(parseFockVector("1*b(-1)b(-2) @q0", 2));  // not descending
  CHECK_THROWS(parseFockVector("nonsense", 2));
}
