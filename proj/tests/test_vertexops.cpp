#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wboson/vertexops.hpp"

using namespace wb;

TEST_CASE("lattice pairing") {
  CHECK(latticePairing(2, 2, -2) == -4);   // <alpha, -alpha> = -2p
  CHECK(latticePairing(3, 3, 1) == 2);     // <alpha, beta> = 2
  CHECK_THROWS(latticePairing(3, 1, 1));   // 2/3 is not integral
}

TEST_CASE("schur vectors") {
  int p = 2;
  FockVector s0 = schurVector(p, 0, p);
  CHECK(s0 == FockVector::vacuum(latticeSector(p, 0)));
  FockVector s1 = schurVector(p, 1, p);
  CHECK(s1.coeff({1}) == Rational(p));
  FockVector s3 = schurVector(p, 3, p);
  CHECK(s3.coeff({3}) == Rational(2, 3));
  CHECK(s3.coeff({2, 1}) == Rational(2));
  CHECK(s3.coeff({1, 1, 1}) == Rational(4, 3));
}

TEST_CASE("screening operators on exponentials") {
  for (int p : {2, 3}) {
    FockVector vac = FockVector::vacuum(latticeSector(p, 0));
    CHECK(screenQ(vac).isZero());
    CHECK(screenQtilde(vac).isZero());
    FockVector F = FockVector::vacuum(latticeSector(p, -p));
    FockVector H = screenQ(F);
    CHECK(H == schurVector(p, 2 * p - 1, p));
    CHECK(screenQtilde(H).isZero());
    CHECK(!screenQ(H).isZero());
    CHECK(screenQ(screenQ(H)).isZero());  // Q^3 F = 0
  }
}

TEST_CASE("products with the vacuum") {
  int p = 2;
  FockVector vac = FockVector::vacuum(latticeSector(p, 0));
  FockVector om = virasoro(-2, vac);
  FockVector F = FockVector::vacuum(latticeSector(p, -p));
  FockVector H = screenQ(F);
  // a_{-1} 1 = a; a_n 1 = 0 for n >= 0.
  for (const FockVector& a : {om, H, F}) {
    CHECK(product(a, -1, vac) == a);
    CHECK(product(a, 0, vac).isZero());
    CHECK(product(a, 3, vac).isZero());
  }
}

TEST_CASE("omega modes agree with the virasoro operator") {
  int p = 3;
  FockVector vac = FockVector::vacuum(latticeSector(p, 0));
  FockVector om = virasoro(-2, vac);
  FockVector H = screenQ(FockVector::vacuum(latticeSector(p, -p)));
  for (const FockVector& v : {om, H}) {
    for (int n = -3; n <= 3; ++n)
      CHECK(product(om, n + 1, v) == virasoro(n, v));
  }
  CHECK(product(om, 1, om) == Rational(2) * om);
  CHECK(product(om, 3, om) ==
        (ModelParams::make(p).centralCharge / Rational(2)) * vac);
}

TEST_CASE("commutator law") {
  // a_m b_n - b_n a_m = sum_j C(m, j) (a_j b)_{m+n-j}, applied to vectors.
  int p = 2;
  FockVector vac = FockVector::vacuum(latticeSector(p, 0));
  FockVector om = virasoro(-2, vac);
  FockVector H = screenQ(FockVector::vacuum(latticeSector(p, -p)));
  FockVector target = heis(-2, heis(-1, vac));
  for (const FockVector& a : {om, H})
    for (const FockVector& b : {om, H})
      for (long m = 0; m <= 2; ++m)
        for (long n = -1; n <= 1; ++n) {
          FockVector lhs = product(a, m, product(b, n, target)) -
                           product(b, n, product(a, m, target));
          FockVector rhs(lhs.sector());
          for (long j = 0; j <= 8; ++j) {
            FockVector ab = product(a, j, b);
            if (ab.isZero()) continue;
            rhs += binomialNat(m, j) * product(ab, m + n - j, target);
          }
          CHECK(lhs == rhs);
        }
}

TEST_CASE("translation covariance of products") {
  int p = 2;
  FockVector vac = FockVector::vacuum(latticeSector(p, 0));
  std::vector<FockVector> panel = {vac, heis(-1, vac),
                                   heis(-2, heis(-1, vac))};
  FockVector om = virasoro(-2, vac);
  FockVector F = FockVector::vacuum(latticeSector(p, -p));
  for (const FockVector& a : {om, F})
    for (long n = -2; n <= 2; ++n)
      CHECK(lminus1DerivativeCheck(a, n, panel));
}

TEST_CASE("screening commutes with virasoro modes") {
  int p = 2;
  FockVector vac = FockVector::vacuum(latticeSector(p, 0));
  FockVector v = heis(-3, heis(-1, vac));
  for (int n = -2; n <= 2; ++n) {
    CHECK(screenQ(virasoro(n, v)) == virasoro(n, screenQ(v)));
    CHECK(screenQtilde(virasoro(n, v)) == virasoro(n, screenQtilde(v)));
  }
}
