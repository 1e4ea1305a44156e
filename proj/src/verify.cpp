#include "wboson/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "wboson/cache.hpp"
#include "wboson/fock.hpp"
#include "wboson/vertexops.hpp"
#include "wboson/walgebra.hpp"
#include "wboson/zhu.hpp"

namespace wb {
namespace {

struct Ctx {
  int p;
  int N;
  std::string cacheDir;
  int jobs;
};

using CheckFn = std::function<bool(const Ctx&, std::string&)>;

void addCheck(SuiteResult& sr, const Ctx& ctx, const std::string& name,
              const CheckFn& f) {
  CheckResult cr{name, false, ""};
  try {
    cr.pass = f(ctx, cr.note);
    if (cr.pass) cr.note.clear();
  } catch (const std::exception& e) {
    cr.pass = false;
    cr.note = e.what();
  }
  sr.checks.push_back(cr);
}

FockVector monoVec(int p, int charge, const Partition& m) {
  FockVector v(latticeSector(p, charge));
  v.addTerm(m, Rational(1));
  return v;
}

// All basis monomials of the given charge with level <= maxLvl.
std::vector<FockVector> chargeBasis(int p, int charge, int maxLvl) {
  std::vector<FockVector> out;
  for (int lvl = 0; lvl <= maxLvl; ++lvl)
    for (const auto& part : basisPartitions(lvl))
      out.push_back(monoVec(p, charge, part));
  return out;
}

FockVector omegaVector(int p) {
  return virasoro(-2, FockVector::vacuum(latticeSector(p, 0)));
}

// o(a) extended linearly over the weight components of a.
Rational topLevelInhomog(const FockVector& a, const Rational& t) {
  Rational s(0);
  for (int lvl = 0; lvl <= a.maxLevel(); ++lvl) {
    FockVector comp = a.levelComponent(lvl);
    if (!comp.isZero()) s = s + topLevelEvalAt(comp, t);
  }
  return s;
}

std::string ordinal(int i) {
  std::ostringstream os;
  os << i;
  return os.str();
}

// ---------------------------------------------------------------- heisenberg

bool checkHeisBrackets(const Ctx& ctx, std::string& note) {
  int p = ctx.p;
  for (int charge : {0, 1}) {
    for (const auto& v : chargeBasis(p, charge, std::min(ctx.N, 6))) {
      for (int m = -3; m <= 3; ++m) {
        for (int n = -3; n <= 3; ++n) {
          FockVector lhs = heis(m, heis(n, v)) - heis(n, heis(m, v));
          FockVector rhs(v.sector());
          if (m + n == 0) rhs = Rational(2L * m, p) * v;
          if (lhs != rhs) {
            note = "bracket [b(" + ordinal(m) + "),b(" + ordinal(n) +
                   ")] failed at charge " + ordinal(charge);
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool checkHeisZeroMode(const Ctx& ctx, std::string& note) {
  int p = ctx.p;
  for (int charge = -p; charge <= p; ++charge) {
    for (const auto& v : chargeBasis(p, charge, std::min(ctx.N, 4))) {
      if (heis(0, v) != v.sector().b0 * v) {
        note = "b(0) eigenvalue wrong at charge " + ordinal(charge);
        return false;
      }
    }
  }
  // Continuous sector sample.
  Sector<Rational> s = continuousSector<Rational>(p, Rational(7, 3));
  FockVector w = FockVector::vacuum(s);
  w = heis(-2, w) + heis(-1, heis(-1, w));
  if (heis(0, w) != s.b0 * w) {
    note = "b(0) eigenvalue wrong in the continuous sector";
    return false;
  }
  return true;
}

bool checkHeisAnnihilation(const Ctx& ctx, std::string&) {
  for (int charge : {0, 1, -ctx.p}) {
    FockVector vac = FockVector::vacuum(latticeSector(ctx.p, charge));
    for (int n = 1; n <= 4; ++n)
      if (!heis(n, vac).isZero()) return false;
  }
  return true;
}

// ------------------------------------------------------------------ virasoro

bool checkVirBrackets(const Ctx& ctx, std::string& note) {
  for (const auto& v : chargeBasis(ctx.p, 0, std::min(ctx.N, 8))) {
    for (int m = -3; m <= 3; ++m)
      for (int n = -3; n <= 3; ++n)
        if (!virasoroBracketCheck(m, n, v)) {
          note = "[L(" + ordinal(m) + "),L(" + ordinal(n) + ")] failed";
          return false;
        }
  }
  // Thin full-depth pass.
  for (const auto& v : chargeBasis(ctx.p, 0, ctx.N)) {
    for (auto [m, n] : {std::pair{1, -1}, {2, -2}, {2, -1}})
      if (!virasoroBracketCheck(m, n, v)) {
        note = "deep bracket [L(" + ordinal(m) + "),L(" + ordinal(n) +
               ")] failed";
        return false;
      }
  }
  return true;
}

bool checkVirGrading(const Ctx& ctx, std::string& note) {
  int p = ctx.p;
  for (int charge : {0, 1, -1, p, -p}) {
    for (int lvl = 0; lvl <= std::min(ctx.N, 6); ++lvl) {
      for (const auto& part : basisPartitions(lvl)) {
        FockVector v = monoVec(p, charge, part);
        Rational wt = v.sector().delta + Rational(lvl);
        if (virasoro(0, v) != wt * v) {
          note = "L(0) not diagonal at charge " + ordinal(charge) +
                 " level " + ordinal(lvl);
          return false;
        }
      }
    }
  }
  return true;
}

bool checkVirLatticeHw(const Ctx& ctx, std::string& note) {
  int p = ctx.p;
  for (int m : {1, -1, p, -p, 2 * p, -2 * p}) {
    FockVector e = FockVector::vacuum(latticeSector(p, m));
    for (int n = 1; n <= 4; ++n)
      if (!virasoro(n, e).isZero()) {
        note = "L(" + ordinal(n) + ") e^{m beta} != 0, m=" + ordinal(m);
        return false;
      }
    Rational expect(1L * m * m - 1L * m * (p - 1), p);
    if (virasoro(0, e) != expect * e) {
      note = "weight of e^{m beta} wrong, m=" + ordinal(m);
      return false;
    }
  }
  return true;
}

bool checkVirContinuousHw(const Ctx& ctx, std::string& note) {
  Sector<Poly1> s = continuousSector<Poly1>(ctx.p, Poly1::x());
  FockVec<Poly1> v = FockVec<Poly1>::vacuum(s);
  for (int n = 1; n <= 3; ++n)
    if (!virasoro(n, v).isZero()) {
      note = "L(" + ordinal(n) + ") on the generic highest-weight vector";
      return false;
    }
  if (virasoro(0, v) != s.delta * v) {
    note = "L(0) eigenvalue mismatch";
    return false;
  }
  if (s.delta != curveU(ctx.p)) {
    note = "highest weight differs from u(t)";
    return false;
  }
  return true;
}

bool checkCentralCharge(const Ctx& ctx, std::string& note) {
  int p = ctx.p;
  ModelParams mp = ModelParams::make(p);
  Rational expect = Rational(1) - Rational(6L * (p - 1) * (p - 1), p);
  if (mp.centralCharge != expect) {
    note = "closed form mismatch";
    return false;
  }
  // [L(2), L(-2)] 1 = 4 L(0) 1 + (c/2) 1 = (c/2) 1 on the vacuum.
  FockVector vac = FockVector::vacuum(latticeSector(p, 0));
  FockVector lhs = virasoro(2, virasoro(-2, vac)) -
                   virasoro(-2, virasoro(2, vac));
  if (lhs != (expect / Rational(2)) * vac) {
    note = "central term of [L(2),L(-2)] wrong";
    return false;
  }
  return true;
}

// ----------------------------------------------------------------- screening

bool checkScreenVacuum(const Ctx& ctx, std::string& note) {
  int p = ctx.p;
  FockVector vac = FockVector::vacuum(latticeSector(p, 0));
  if (!screenQ(vac).isZero()) {
    note = "Q 1 != 0";
    return false;
  }
  if (!screenQtilde(vac).isZero()) {
    note = "Qtilde 1 != 0";
    return false;
  }
  Generators g = makeGenerators(p);
  if (g.H.isZero() || g.H != schurVector(p, 2 * p - 1, p)) {
    note = "Q e^{-alpha} is not the expected Schur vector";
    return false;
  }
  return true;
}

bool checkQtildeExponentials(const Ctx& ctx, std::string& note) {
  int p = ctx.p;
  for (int n : {1, 2}) {
    FockVector em = FockVector::vacuum(latticeSector(p, -n * p));
    if (!screenQtilde(em).isZero()) {
      note = "Qtilde e^{-" + ordinal(n) + " alpha} != 0";
      return false;
    }
  }
  if (!screenQtilde(makeGenerators(p).H).isZero()) {
    note = "Qtilde H != 0";
    return false;
  }
  return true;
}

bool checkQQtildeCommute(const Ctx& ctx, std::string& note) {
  for (const auto& v : chargeBasis(ctx.p, 0, std::min(ctx.N, 6))) {
    if (screenQ(screenQtilde(v)) != screenQtilde(screenQ(v))) {
      note = "[Q, Qtilde] != 0 on a charge-0 basis vector";
      return false;
    }
  }
  return true;
}

bool checkScreenVirasoroCommute(const Ctx& ctx, std::string& note) {
  std::vector<FockVector> panel = chargeBasis(ctx.p, 0, std::min(ctx.N, 4));
  panel.push_back(FockVector::vacuum(latticeSector(ctx.p, -ctx.p)));
  for (const auto& v : panel) {
    for (int n = -2; n <= 2; ++n) {
      if (screenQ(virasoro(n, v)) != virasoro(n, screenQ(v))) {
        note = "[L(" + ordinal(n) + "), Q] != 0";
        return false;
      }
      if (screenQtilde(virasoro(n, v)) != virasoro(n, screenQtilde(v))) {
        note = "[L(" + ordinal(n) + "), Qtilde] != 0";
        return false;
      }
    }
  }
  return true;
}

bool checkQDerivation(const Ctx& ctx, std::string& note) {
  Generators g = makeGenerators(ctx.p);
  FockVector om = omegaVector(ctx.p);
  for (long k : {-2L, -1L, 0L}) {
    FockVector lhs = screenQ(product(g.F, k, g.F));
    FockVector rhs = product(g.H, k, g.F) + product(g.F, k, g.H);
    if (lhs != rhs) {
      note = "Q(F_k F) != (QF)_k F + F_k (QF), k=" + ordinal((int)k);
      return false;
    }
  }
  for (long k : {-1L, 0L, 1L}) {
    // Q omega = 0, so the derivation rule collapses to commuting past omega.
    if (screenQ(product(om, k, g.F)) != product(om, k, g.H)) {
      note = "Q(omega_k F) != omega_k (QF), k=" + ordinal((int)k);
      return false;
    }
  }
  return true;
}

bool checkTranslationCovariance(const Ctx& ctx, std::string& note) {
  Generators g = makeGenerators(ctx.p);
  std::vector<FockVector> panel = chargeBasis(ctx.p, 0, 3);
  panel.push_back(g.F);
  for (const FockVector& a : {omegaVector(ctx.p), g.F})
    for (long n : {-2L, -1L, 0L, 1L, 2L})
      if (!lminus1DerivativeCheck(a, n, panel)) {
        note = "(L(-1)a)_n != -n a_{n-1}, n=" + ordinal((int)n);
        return false;
      }
  return true;
}

// -------------------------------------------------------------------- pomoc1

bool checkQCubedF(const Ctx& ctx, std::string&) {
  return screenQ(makeGenerators(ctx.p).E).isZero();
}

bool checkGeneratorModesZero(const Ctx& ctx, std::string& note) {
  Generators g = makeGenerators(ctx.p);
  for (long i = -2L * ctx.p; i <= 4L * ctx.p - 3; ++i) {
    if (!product(g.F, i, g.F).isZero()) {
      note = "F_i F != 0 at i=" + ordinal((int)i);
      return false;
    }
    if (!product(g.E, i, g.E).isZero()) {
      note = "E_i E != 0 at i=" + ordinal((int)i);
      return false;
    }
  }
  return true;
}

bool checkQHHZero(const Ctx& ctx, std::string& note) {
  for (long i = -2L * ctx.p; i <= 4L * ctx.p - 3; ++i)
    if (!hihMembership(ctx.p, i)) {
      note = "Q(H_i H) != 0 at i=" + ordinal((int)i);
      return false;
    }
  return true;
}

// ------------------------------------------------------------------ singular

bool checkSingularWeights(const Ctx& ctx, std::string& note) {
  int p = ctx.p;
  if (singularVector(p, 0) != FockVector::vacuum(latticeSector(p, 0))) {
    note = "u_0 is not the vacuum";
    return false;
  }
  for (int n : {1, 2}) {
    FockVector u = singularVector(p, n);
    int lvl = n * n * p + n * p - n;
    if (u.isZero() || u != u.levelComponent(lvl)) {
      note = "u_" + ordinal(n) + " is not concentrated at level " +
             ordinal(lvl);
      return false;
    }
  }
  return true;
}

bool checkSingularPrimary(const Ctx& ctx, std::string& note) {
  for (int n : {1, 2}) {
    FockVector u = singularVector(ctx.p, n);
    if (!virasoro(1, u).isZero() || !virasoro(2, u).isZero()) {
      note = "u_" + ordinal(n) + " is not primary";
      return false;
    }
  }
  return true;
}

bool checkQPowersOnExponentials(const Ctx& ctx, std::string& note) {
  int p = ctx.p;
  for (int n : {1, 2}) {
    FockVector v = FockVector::vacuum(latticeSector(p, -n * p));
    for (int j = 1; j <= 2 * n + 1; ++j) {
      v = screenQ(v);
      bool wantZero = (j == 2 * n + 1);
      if (v.isZero() != wantZero) {
        note = "Q^" + ordinal(j) + " e^{-" + ordinal(n) + " alpha} " +
               (wantZero ? "!= 0" : "== 0");
        return false;
      }
    }
  }
  return true;
}

bool checkSingularQtildeZero(const Ctx& ctx, std::string& note) {
  for (int n : {1, 2})
    if (!screenQtilde(singularVector(ctx.p, n)).isZero()) {
      note = "Qtilde u_" + ordinal(n) + " != 0";
      return false;
    }
  return true;
}

bool checkCosingular(const Ctx& ctx, std::string& note) {
  int p = ctx.p;
  FockVector w = cosingularWitness(p, 1);
  if (screenQ(w) != FockVector::vacuum(latticeSector(p, p))) {
    note = "Q w != e^{alpha}";
    return false;
  }
  if (screenQtilde(w).isZero()) {
    note = "witness lies in ker Qtilde";
    return false;
  }
  return true;
}

// ------------------------------------------------------------------- kernels

bool subspaceMatch(const KernelBasis& ker,
                   const std::vector<FockVector>& words, int lvl,
                   std::string& note) {
  std::vector<Partition> basis = basisPartitions(lvl);
  SpanBuilder kerSpan(static_cast<long>(basis.size()));
  for (const auto& v : ker.vectors) kerSpan.add(coords(v, basis));
  SpanBuilder wordSpan(static_cast<long>(basis.size()));
  for (const auto& w : words) {
    std::vector<Rational> c = coords(w, basis);
    if (!kerSpan.contains(c)) {
      note = "word vector outside the kernel at level " + ordinal(lvl);
      return false;
    }
    wordSpan.add(c);
  }
  if (wordSpan.rank() != kerSpan.rank()) {
    note = "span dimension " + ordinal((int)wordSpan.rank()) +
           " != kernel dimension " + ordinal((int)kerSpan.rank()) +
           " at level " + ordinal(lvl);
    return false;
  }
  return true;
}

bool checkKerQ(const Ctx& ctx, std::string& note) {
  FockVector vac = FockVector::vacuum(latticeSector(ctx.p, 0));
  for (int lvl = 0; lvl <= ctx.N; ++lvl) {
    KernelBasis ker =
        kernelCached(ctx.cacheDir, ctx.p, ScreeningOp::Q, lvl, ctx.jobs);
    if (!subspaceMatch(ker, virasoroWordVectors({vac}, lvl), lvl, note)) {
      note = "ker Q: " + note;
      return false;
    }
  }
  return true;
}

bool checkKerQtilde(const Ctx& ctx, std::string& note) {
  std::vector<FockVector> seeds;
  for (int n = 0;; ++n) {
    if (n * n * ctx.p + n * ctx.p - n > ctx.N) break;
    seeds.push_back(singularVector(ctx.p, n));
  }
  for (int lvl = 0; lvl <= ctx.N; ++lvl) {
    KernelBasis ker =
        kernelCached(ctx.cacheDir, ctx.p, ScreeningOp::Qtilde, lvl, ctx.jobs);
    if (!subspaceMatch(ker, virasoroWordVectors(seeds, lvl), lvl, note)) {
      note = "ker Qtilde: " + note;
      return false;
    }
  }
  return true;
}

// ------------------------------------------------------------------ spanning

bool checkSpanningFamily(const Ctx& ctx, std::string& note) {
  for (int lvl = 0; lvl <= ctx.N; ++lvl)
    if (!spanningCheck(ctx.p, lvl, ctx.jobs)) {
      note = "family fails to span ker Qtilde at level " + ordinal(lvl);
      return false;
    }
  return true;
}

// ----------------------------------------------------------------------- zhu

bool checkZhuUnit(const Ctx& ctx, std::string& note) {
  FockVector vac = FockVector::vacuum(latticeSector(ctx.p, 0));
  FockVector om = omegaVector(ctx.p);
  if (zhuStar(vac, om) != om || zhuStar(om, vac) != om) {
    note = "[1] is not a unit";
    return false;
  }
  return true;
}

bool checkZhuReduction(const Ctx& ctx, std::string& note) {
  FockVector om = omegaVector(ctx.p);
  Poly1 x = Poly1::x();
  if (reduceWords(expressInPbw(om)) != x) {
    note = "[L(-2)1] != x";
    return false;
  }
  if (reduceWords(expressInPbw(zhuStar(om, om))) != x * x) {
    note = "[omega * omega] != x^2";
    return false;
  }
  return true;
}

bool checkZhuCircKernel(const Ctx& ctx, std::string& note) {
  FockVector vac = FockVector::vacuum(latticeSector(ctx.p, 0));
  FockVector om = omegaVector(ctx.p);
  for (const FockVector& b :
       {vac, om, pbwWordVector(ctx.p, {2, 2})}) {
    if (!reduceWords(expressInPbw(zhuCirc(om, b))).isZero()) {
      note = "omega o b does not reduce to zero";
      return false;
    }
  }
  return true;
}

bool checkZhuRoutes(const Ctx& ctx, std::string& note) {
  GRoutes r = computeGRoutes(ctx.p);
  if (r.interpolated != r.algebraic) {
    note = "interpolation and algebraic routes disagree";
    return false;
  }
  if (r.interpolated != closedFormG(ctx.p)) {
    note = "routes disagree with the closed form";
    return false;
  }
  return true;
}

bool checkZhuG2Explicit(const Ctx&, std::string& note) {
  // g(x) = (128/9) x^2 (x + 1/8) at p = 2.
  Poly1 x = Poly1::x();
  Poly1 expect = Rational(128, 9) * (x * x * x) + Rational(16, 9) * (x * x);
  if (closedFormG(2) != expect) {
    note = "closed form at p=2 differs from (128/9) x^2 (x + 1/8)";
    return false;
  }
  return true;
}

bool checkZhuRepresentative(const Ctx& ctx, std::string& note) {
  Generators g = makeGenerators(ctx.p);
  FockVector hh = zhuStar(g.H, g.H);
  Poly1 a = reduceWords(expressInPbw(hh, false));
  Poly1 b = reduceWords(expressInPbw(hh, true));
  if (a != b) {
    note = "reduction depends on the PBW representative";
    return false;
  }
  if (a != closedFormG(ctx.p)) {
    note = "reduced [H * H] differs from g";
    return false;
  }
  return true;
}

bool checkLevel6Relation(const Ctx&, std::string& note) {
  // p=2: H_{-1}H lies in the Virasoro vacuum module, with the explicit
  // weight-6 expression fixed by the leading coefficient C_2 = 128/9.
  Generators g = makeGenerators(2);
  FockVector hh = product(g.H, -1, g.H);
  FockVector vac = FockVector::vacuum(latticeSector(2, 0));
  auto L = [&](int n, const FockVector& v) { return virasoro(n, v); };
  FockVector combo =
      Rational(19, 36) * L(-3, L(-3, vac)) +
      Rational(8, 9) * L(-2, L(-2, L(-2, vac))) +
      Rational(14, 9) * L(-2, L(-4, vac)) -
      Rational(44, 9) * L(-6, vac);
  if (hh != Rational(16) * combo) {
    note = "H_{-1}H differs from the frozen weight-6 expression";
    return false;
  }
  return true;
}

bool checkZhuStarCommutes(const Ctx& ctx, std::string& note) {
  Generators g = makeGenerators(ctx.p);
  FockVector om = omegaVector(ctx.p);
  FockVector ab = zhuStar(om, g.H);
  FockVector ba = zhuStar(g.H, om);
  for (int j = 0; j <= 2 * ctx.p + 1; ++j) {
    Rational t(3 * j + 1, 3);
    if (topLevelInhomog(ab, t) != topLevelInhomog(ba, t)) {
      note = "o(omega * H) != o(H * omega) at t=" + ordinal(3 * j + 1) + "/3";
      return false;
    }
  }
  return true;
}

// --------------------------------------------------------------------- curve

bool checkCurveParameterization(const Ctx& ctx, std::string& note) {
  CurveData cd = curve(ctx.p);
  if (!cd.P.evaluate(cd.u, cd.v).isZero()) {
    note = "P(u(t), v(t)) != 0";
    return false;
  }
  if (cd.P != curveP(ctx.p) || cd.g != closedFormG(ctx.p)) {
    note = "assembled curve differs from the closed form";
    return false;
  }
  return true;
}

bool checkCurveSymmetry(const Ctx& ctx, std::string& note) {
  Poly1 u = curveU(ctx.p), v = curveV(ctx.p);
  Poly1 mirror = Poly1(Rational(2L * (ctx.p - 1))) - Poly1::x();
  if (u.evaluate(mirror) != u) {
    note = "u(2(p-1) - t) != u(t)";
    return false;
  }
  if (v.evaluate(mirror) != Rational(-1) * v) {
    note = "v(2(p-1) - t) != -v(t)";
    return false;
  }
  return true;
}

bool checkCurveConstants(const Ctx& ctx, std::string& note) {
  int p = ctx.p;
  Rational cp(1);
  for (int i = 0; i < 2 * p - 1; ++i) cp = cp * Rational(4 * p);
  mpz_class fact = factorialZ(2 * p - 1);
  cp = cp / Rational(fact * fact, mpz_class(1));
  if (curveConstant(p) != cp) {
    note = "C_p mismatch";
    return false;
  }
  if (p == 2 && curveConstant(2) != Rational(128, 9)) {
    note = "C_2 != 128/9";
    return false;
  }
  if (p == 2 && ModelParams::make(2).centralCharge != Rational(-2)) {
    note = "central charge at p=2 is not -2";
    return false;
  }
  return true;
}

bool checkClassifySamples(const Ctx& ctx, std::string& note) {
  std::vector<HighestWeightSample> table = classify(ctx.p);
  if (static_cast<int>(table.size()) != 2 * ctx.p + 1) {
    note = "unexpected sample count";
    return false;
  }
  if (ctx.p == 2) {
    const HighestWeightSample& s = table[3];
    if (s.t != Rational(3) || s.x != Rational(3, 8) || s.y != Rational(1)) {
      note = "sample at t=3, p=2 is not (3/8, 1)";
      return false;
    }
  }
  return true;
}

bool checkTopLevelSymbolic(const Ctx& ctx, std::string& note) {
  FockVector om = omegaVector(ctx.p);
  if (topLevelEvalSym(om) != curveU(ctx.p)) {
    note = "o(omega) != u(t)";
    return false;
  }
  if (topLevelEvalSym(makeGenerators(ctx.p).H) != curveV(ctx.p)) {
    note = "o(H) != binom(t, 2p-1)";
    return false;
  }
  return true;
}

bool checkTopLevelSamples(const Ctx& ctx, std::string& note) {
  FockVector om = omegaVector(ctx.p);
  FockVector H = makeGenerators(ctx.p).H;
  Poly1 u = curveU(ctx.p), v = curveV(ctx.p);
  for (int j = 0; j <= 2 * ctx.p + 1; ++j) {
    Rational t(2 * j - 1, 2);
    if (topLevelEvalAt(om, t) != u.evaluate(t) ||
        topLevelEvalAt(H, t) != v.evaluate(t)) {
      note = "sampled eigenvalues leave the curve at t=" +
             ordinal(2 * j - 1) + "/2";
      return false;
    }
  }
  return true;
}

bool checkIdealMembership(const Ctx& ctx, std::string& note) {
  Poly2 P = curveP(ctx.p);
  Poly1 x = Poly1::x();
  Poly1 A = Rational(3) * x * x - Rational(1, 2);
  Poly1 B = x + Rational(5, 7);
  Poly1 C = Rational(2) * x * x * x - x;
  // A*P is in the ideal; adding B*y + C leaves a nonzero remainder.
  Poly2 member = Poly2::fromX(A) * P;
  auto [q1, r1] = divideInY(member, P);
  if (!r1.isZero() || q1 != Poly2::fromX(A)) {
    note = "division misses an ideal member";
    return false;
  }
  Poly2 off = member + Poly2::fromX(B) * Poly2::y() + Poly2::fromX(C);
  auto [q2, r2] = divideInY(off, P);
  if (r2 != Poly2::fromX(B) * Poly2::y() + Poly2::fromX(C)) {
    note = "remainder is not B y + C";
    return false;
  }
  // Parity along the parameterization: the y-part is odd, the x-part even
  // under t -> 2(p-1) - t.
  Poly1 u = curveU(ctx.p), v = curveV(ctx.p);
  Poly1 mirror = Poly1(Rational(2L * (ctx.p - 1))) - Poly1::x();
  Poly1 onCurve = B.evaluate(u) * v + C.evaluate(u);
  Poly1 mirrored = onCurve.evaluate(mirror);
  Poly1 evenPart = mirrored + onCurve;  // = 2 C(u(t))
  if (evenPart != Rational(2) * C.evaluate(u)) {
    note = "parity of the remainder along the curve is broken";
    return false;
  }
  return true;
}

// ------------------------------------------------------------------- harness

using SuiteFn = std::function<void(SuiteResult&, const Ctx&)>;

void suiteHeisenberg(SuiteResult& sr, const Ctx& ctx) {
  addCheck(sr, ctx, "heisenberg.bracket_pairs", checkHeisBrackets);
  addCheck(sr, ctx, "heisenberg.zero_mode_eigenvalue", checkHeisZeroMode);
  addCheck(sr, ctx, "heisenberg.positive_modes_annihilate",
           checkHeisAnnihilation);
}

void suiteVirasoro(SuiteResult& sr, const Ctx& ctx) {
  addCheck(sr, ctx, "virasoro.bracket_pairs", checkVirBrackets);
  addCheck(sr, ctx, "virasoro.l0_grading", checkVirGrading);
  addCheck(sr, ctx, "virasoro.lattice_highest_weights", checkVirLatticeHw);
  addCheck(sr, ctx, "virasoro.continuous_highest_weight",
           checkVirContinuousHw);
  addCheck(sr, ctx, "virasoro.central_charge", checkCentralCharge);
}

void suiteScreening(SuiteResult& sr, const Ctx& ctx) {
  addCheck(sr, ctx, "screening.vacuum_and_schur", checkScreenVacuum);
  addCheck(sr, ctx, "screening.qtilde_exponentials",
           checkQtildeExponentials);
  addCheck(sr, ctx, "screening.q_qtilde_commute", checkQQtildeCommute);
  addCheck(sr, ctx, "screening.virasoro_commute",
           checkScreenVirasoroCommute);
  addCheck(sr, ctx, "screening.q_derivation", checkQDerivation);
  addCheck(sr, ctx, "screening.translation_covariance",
           checkTranslationCovariance);
}

void suitePomoc1(SuiteResult& sr, const Ctx& ctx) {
  addCheck(sr, ctx, "relations.q_cubed_f_zero", checkQCubedF);
  addCheck(sr, ctx, "relations.generator_modes_zero",
           checkGeneratorModesZero);
  addCheck(sr, ctx, "relations.q_hh_zero", checkQHHZero);
}

void suiteSingular(SuiteResult& sr, const Ctx& ctx) {
  addCheck(sr, ctx, "singular.weights", checkSingularWeights);
  addCheck(sr, ctx, "singular.primary", checkSingularPrimary);
  addCheck(sr, ctx, "singular.q_powers", checkQPowersOnExponentials);
  addCheck(sr, ctx, "singular.qtilde_zero", checkSingularQtildeZero);
  addCheck(sr, ctx, "singular.cosingular_witness", checkCosingular);
}

void suiteKernels(SuiteResult& sr, const Ctx& ctx) {
  addCheck(sr, ctx, "kernels.ker_q_is_vacuum_module", checkKerQ);
  addCheck(sr, ctx, "kernels.ker_qtilde_is_singular_module", checkKerQtilde);
}

void suiteSpanning(SuiteResult& sr, const Ctx& ctx) {
  addCheck(sr, ctx, "spanning.family_spans_ker_qtilde", checkSpanningFamily);
}

void suiteZhu(SuiteResult& sr, const Ctx& ctx) {
  addCheck(sr, ctx, "zhu.unit", checkZhuUnit);
  addCheck(sr, ctx, "zhu.reduction_basics", checkZhuReduction);
  addCheck(sr, ctx, "zhu.circ_reduces_to_zero", checkZhuCircKernel);
  if (ctx.p <= 4)
    addCheck(sr, ctx, "zhu.g_route_agreement", checkZhuRoutes);
  if (ctx.p == 2) {
    addCheck(sr, ctx, "zhu.g_p2_explicit", checkZhuG2Explicit);
    addCheck(sr, ctx, "zhu.level6_relation", checkLevel6Relation);
  }
  if (ctx.p <= 3)
    addCheck(sr, ctx, "zhu.representative_independence",
             checkZhuRepresentative);
  addCheck(sr, ctx, "zhu.star_commutes_on_modules", checkZhuStarCommutes);
}

void suiteCurve(SuiteResult& sr, const Ctx& ctx) {
  addCheck(sr, ctx, "curve.parameterization", checkCurveParameterization);
  addCheck(sr, ctx, "curve.mirror_symmetry", checkCurveSymmetry);
  addCheck(sr, ctx, "curve.constants", checkCurveConstants);
  addCheck(sr, ctx, "curve.classification_samples", checkClassifySamples);
  addCheck(sr, ctx, "curve.top_level_symbolic", checkTopLevelSymbolic);
  addCheck(sr, ctx, "curve.top_level_samples", checkTopLevelSamples);
  addCheck(sr, ctx, "curve.ideal_membership", checkIdealMembership);
}

const std::vector<std::pair<std::string, SuiteFn>>& suiteTable() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"heisenberg", suiteHeisenberg}, {"virasoro", suiteVirasoro},
      {"screening", suiteScreening},   {"relations", suitePomoc1},
      {"singular", suiteSingular},     {"kernels", suiteKernels},
      {"spanning", suiteSpanning},     {"zhu", suiteZhu},
      {"curve", suiteCurve},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& allSuites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suiteTable()) v.push_back(name);
    return v;
  }();
  return names;
}

bool knownSuite(const std::string& name) {
  const auto& names = allSuites();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<SuiteResult> runVerify(const VerifyOptions& opts) {
  if (opts.p < 2) throw std::invalid_argument("verify: p must be >= 2");
  for (const auto& s : opts.suites)
    if (!knownSuite(s))
      throw std::invalid_argument("verify: unknown suite '" + s + "'");
  Ctx ctx{opts.p,
          opts.maxLevel >= 0 ? opts.maxLevel : defaultMaxLevel(opts.p),
          opts.cacheDir, opts.jobs < 1 ? 1 : opts.jobs};
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : suiteTable()) {
    if (!opts.suites.empty() &&
        std::find(opts.suites.begin(), opts.suites.end(), name) ==
            opts.suites.end())
      continue;
    SuiteResult sr;
    sr.suite = name;
    fn(sr, ctx);
    out.push_back(std::move(sr));
  }
  return out;
}

bool allPassed(const std::vector<SuiteResult>& results) {
  for (const auto& sr : results)
    for (const auto& c : sr.checks)
      if (!c.pass) return false;
  return true;
}

std::string formatResults(const std::vector<SuiteResult>& results,
                          const VerifyOptions& opts) {
  std::ostringstream os;
  int lvl = opts.maxLevel >= 0 ? opts.maxLevel : defaultMaxLevel(opts.p);
  os << "verify p=" << opts.p << " max-level=" << lvl << "\n";
  long passed = 0, failed = 0;
  for (const auto& sr : results) {
    os << "[" << sr.suite << "]\n";
    for (const auto& c : sr.checks) {
      if (c.pass) {
        ++passed;
        os << "  PASS " << c.name << "\n";
      } else {
        ++failed;
        os << "  FAIL " << c.name;
        if (!c.note.empty()) os << ": " << c.note;
        os << "\n";
      }
    }
  }
  os << "summary: " << (passed + failed) << " checks, " << passed
     << " passed, " << failed << " failed\n";
  return os.str();
}

}  // namespace wb
