#include "wboson/zhu.hpp"

namespace wb {
namespace {

int homogeneousWeight(const FockVector& a) {
  if (a.isZero()) throw std::invalid_argument("zhu: zero left factor");
  if (a.sector().kind != SectorKind::Lattice || a.sector().charge != 0)
    throw std::invalid_argument("zhu: left factor must be charge-0");
  int w = a.maxLevel();
  if (a.levelComponent(w) != a)
    throw std::invalid_argument("zhu: left factor must be homogeneous");
  return w;
}

}  // namespace

FockVector zhuStar(const FockVector& a, const FockVector& b) {
  int w = homogeneousWeight(a);
  FockVector acc;
  for (int i = 0; i <= w; ++i) {
    FockVector t = product(a, i - 1, b);
    if (t.isZero()) continue;
    t = binomialNat(w, i) * t;
    acc = acc.isZero() ? t : acc + t;
  }
  return acc;
}

FockVector zhuCirc(const FockVector& a, const FockVector& b) {
  int w = homogeneousWeight(a);
  FockVector acc;
  for (int i = 0; i <= w; ++i) {
    FockVector t = product(a, i - 2, b);
    if (t.isZero()) continue;
    t = binomialNat(w, i) * t;
    acc = acc.isZero() ? t : acc + t;
  }
  return acc;
}

namespace {

// [L(-n) b] for a homogeneous class q = [b] of weight wb, n >= 0.
Poly1 headReduce(int n, int wb, const Poly1& q) {
  Poly1 r0 = Rational(wb) * q;              // L(0)
  if (n == 0) return r0;
  Poly1 r1 = Rational(-wb) * q;             // L(-1)
  if (n == 1) return r1;
  Poly1 r2 = (Poly1::x() + Poly1(Rational(wb))) * q;  // L(-2)
  if (n == 2) return r2;
  Poly1 prev2 = r1, prev = r2;
  for (int m = 3; m <= n; ++m) {
    Poly1 cur = Rational(-2) * prev - prev2;
    prev2 = prev;
    prev = cur;
  }
  return prev;
}

Poly1 reduceWord(const std::vector<int>& parts) {
  if (parts.empty()) return Poly1(Rational(1));
  std::vector<int> rest(parts.begin() + 1, parts.end());
  int wrest = 0;
  for (int x : rest) wrest += x;
  return headReduce(parts.front(), wrest, reduceWord(rest));
}

}  // namespace

Poly1 reduceWords(const std::vector<VirasoroWord>& words) {
  Poly1 acc;
  for (const auto& w : words) acc += w.coeff * reduceWord(w.parts);
  return acc;
}

Rational curveConstant(int p) {
  Rational c(1);
  for (int i = 0; i < 2 * p - 1; ++i) c *= Rational(4 * p);
  mpz_class f = factorialZ(2 * p - 1);
  return c / Rational(f * f, mpz_class(1));
}

Poly1 curveU(int p) {
  return Rational(1, 4 * p) * (Poly1::x() * (Poly1::x() - Poly1(Rational(2 * (p - 1)))));
}

Poly1 curveV(int p) { return binomialPoly(2 * p - 1); }

Poly1 closedFormG(int p) {
  Poly1 g(curveConstant(p));
  g = g * (Poly1::x() + Poly1(Rational((p - 1) * (p - 1), 4 * p)));
  for (int i = 0; i <= p - 2; ++i) {
    Poly1 f = Poly1::x() + Poly1(Rational(static_cast<long>(i) * (2 * p - 2 - i), 4 * p));
    g = g * f * f;
  }
  return g;
}

Poly2 curveP(int p) {
  Poly2 P = Poly2::y() * Poly2::y();
  P -= Poly2::fromX(closedFormG(p));
  return P;
}

GRoutes computeGRoutes(int p) {
  GRoutes r;
  // Route A: deg(g) <= 2p-1; the nodes t = 2p..4p-1 give distinct u(t).
  Poly1 u = curveU(p), v = curveV(p);
  std::vector<std::pair<Rational, Rational>> pts;
  for (int t = 2 * p; t <= 4 * p - 1; ++t) {
    Rational vt = v.evaluate(Rational(t));
    pts.emplace_back(u.evaluate(Rational(t)), vt * vt);
  }
  r.interpolated = interpolate(pts);

  // Route B: the full vertex-algebra pipeline.
  Generators gen = makeGenerators(p);
  FockVector star = zhuStar(gen.H, gen.H);
  r.algebraic = reduceWords(expressInPbw(star));
  return r;
}

Poly1 computeG(int p) {
  GRoutes r = computeGRoutes(p);
  if (r.interpolated != r.algebraic)
    throw std::logic_error("computeG: route disagreement (convention fault)");
  return r.interpolated;
}

CurveData curve(int p, int maxAlgebraicP) {
  if (p < 2) throw std::invalid_argument("curve: p >= 2");
  CurveData c;
  c.p = p;
  c.Cp = curveConstant(p);
  c.u = curveU(p);
  c.v = curveV(p);
  c.P = curveP(p);
  c.centralCharge = ModelParams::make(p).centralCharge;
  Poly1 closed = closedFormG(p);
  if (p <= maxAlgebraicP) {
    c.g = computeG(p);
    if (c.g != closed)
      throw std::logic_error("curve: g does not match the closed form");
  } else {
    c.g = closed;
    // The interpolation route stays as an independent check.
    std::vector<std::pair<Rational, Rational>> pts;
    for (int t = 2 * p; t <= 4 * p - 1; ++t) {
      Rational vt = c.v.evaluate(Rational(t));
      pts.emplace_back(c.u.evaluate(Rational(t)), vt * vt);
    }
    if (interpolate(pts) != closed)
      throw std::logic_error("curve: interpolation does not match closed form");
  }
  // Construction-time invariants.
  if (!c.P.evaluate(c.u, c.v).isZero())
    throw std::logic_error("curve: P(u(t), v(t)) != 0");
  Poly1 mirror = Poly1(Rational(2 * (p - 1))) - Poly1::x();
  if (c.u.evaluate(mirror) != c.u || c.v.evaluate(mirror) != -c.v)
    throw std::logic_error("curve: u/v mirror symmetry fails");
  return c;
}

Poly1 topLevelEvalSym(const FockVector& a) {
  int w = homogeneousWeight(a);
  int p = a.sector().p;
  Sector<Poly1> s = continuousSector<Poly1>(p, Poly1::x());
  FockVec<Poly1> top = FockVec<Poly1>::vacuum(s);
  FockVec<Poly1> r = product(a, w - 1, top);
  return r.coeff({});
}

Rational topLevelEvalAt(const FockVector& a, const Rational& t) {
  int w = homogeneousWeight(a);
  int p = a.sector().p;
  Sector<Rational> s = continuousSector<Rational>(p, t);
  FockVector top = FockVector::vacuum(s);
  FockVector r = product(a, w - 1, top);
  return r.coeff({});
}

std::vector<HighestWeightSample> classify(int p) {
  Poly1 u = curveU(p), v = curveV(p);
  Poly2 P = curveP(p);
  std::vector<HighestWeightSample> out;
  for (int t = 0; t <= 2 * p; ++t) {
    HighestWeightSample s{Rational(t), u.evaluate(Rational(t)),
                          v.evaluate(Rational(t))};
    if (!P.evaluate(s.x, s.y).isZero())
      throw std::logic_error("classify: sample violates P = 0");
    out.push_back(s);
  }
  return out;
}

}  // namespace wb
