#include "wboson/vertexops.hpp"

namespace wb {
namespace {

// Multiplicity map of a partition.
std::map<int, int> mults(const Partition& p) {
  std::map<int, int> m;
  for (int part : p) ++m[part];
  return m;
}

}  // namespace

FockVector schurVector(int p, int r, int scale) {
  FockVector out(latticeSector(p, 0));
  for (const auto& part : partitionsOf(r)) {
    // exp(sum x_n y^n / n) coefficient: prod scale^{m_n} / (n^{m_n} m_n!).
    Rational c(1);
    for (const auto& [n, m] : mults(part)) {
      Rational f(1);
      for (int i = 0; i < m; ++i) f *= Rational(scale, n);
      c *= f / Rational(factorialZ(m), mpz_class(1));
    }
    out.addTerm(part, c);
  }
  return out;
}

FockVector expModeApply(int cgamma, long k, const FockVector& v) {
  if (v.isZero()) return v;
  if (v.sector().kind != SectorKind::Lattice)
    throw std::domain_error("expModeApply: lattice sectors only");
  int p = v.sector().p;
  Sector<Rational> out = latticeSector(p, v.sector().charge + cgamma);

  // Charge shift first; E^+ and E^- involve only nonzero modes.
  FockVector shifted(out);
  for (const auto& [m, c] : v.terms()) shifted.addTerm(m, c);

  // E^+ components: lower[b] lowers the level by b.
  int L = v.maxLevel();
  std::vector<FockVector> lower;
  lower.push_back(shifted);
  for (int b = 1; b <= L; ++b) {
    FockVector acc(out);
    for (int n = 1; n <= b; ++n) {
      FockVector t = heis(n, lower[b - n]);
      if (!t.isZero()) acc += Rational(-cgamma) * t;
    }
    lower.push_back(Rational(1, b) * acc);
  }

  FockVector result(out);
  for (int b = 0; b <= L; ++b) {
    long a = b + k;
    if (a < 0 || lower[b].isZero()) continue;
    // E^- component of level a applied to lower[b].
    std::vector<FockVector> raise;
    raise.push_back(lower[b]);
    for (long s = 1; s <= a; ++s) {
      FockVector acc(out);
      for (long n = 1; n <= s; ++n) {
        FockVector t = heis(static_cast<int>(-n), raise[s - n]);
        if (!t.isZero()) acc += Rational(cgamma) * t;
      }
      raise.push_back(Rational(1, s) * acc);
    }
    result += raise[a];
  }
  return result;
}

FockVector expModePaper(int cgamma, long s, const FockVector& v) {
  if (v.isZero()) return v;
  long pair = latticePairing(v.sector().p, cgamma, v.sector().charge);
  return expModeApply(cgamma, -pair - s - 1, v);
}

FockVector screenQ(const FockVector& v) {
  if (v.isZero()) return v;
  if (v.sector().kind != SectorKind::Lattice)
    throw std::domain_error("screenQ: lattice sectors only");
  return expModePaper(v.sector().p, 0, v);
}

FockVector screenQtilde(const FockVector& v) {
  if (v.isZero()) return v;
  if (v.sector().kind != SectorKind::Lattice)
    throw std::domain_error("screenQtilde: lattice sectors only");
  return expModePaper(-1, 0, v);
}

bool lminus1DerivativeCheck(const FockVector& a, long n,
                            const std::vector<FockVector>& panel) {
  FockVector da = virasoro(-1, a);
  for (const auto& v : panel) {
    FockVector lhs = product(da, n, v);
    FockVector rhs = Rational(-n) * product(a, n - 1, v);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace wb
