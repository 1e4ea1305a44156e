#ifndef WBOSON_ZHU_HPP
#define WBOSON_ZHU_HPP

#include <vector>

#include "wboson/poly.hpp"
#include "wboson/walgebra.hpp"

namespace wb {

// a*b = sum_i C(wt a, i) a_{i-1} b for homogeneous a.
FockVector zhuStar(const FockVector& a, const FockVector& b);
// a o b = sum_i C(wt a, i) a_{i-2} b; spans O(V).
FockVector zhuCirc(const FockVector& a, const FockVector& b);

// Image of a PBW combination in A(V) as a polynomial in x = [omega].
// Rewrite rules, innermost-first:
//   [L(-3-k) b] = -2 [L(-2-k) b] - [L(-1-k) b]   (k >= 0)
//   [L(-1) b]   = -[L(0) b]
//   [L(-2) b]   = x * [b] + [L(0) b]
Poly1 reduceWords(const std::vector<VirasoroWord>& words);

struct GRoutes {
  Poly1 interpolated;  // route A: interpolation through (u(t), v(t)^2)
  Poly1 algebraic;     // route B: reduce(expressInPbw(H * H))
};
GRoutes computeGRoutes(int p);

// Both routes, cross-checked; a disagreement is a convention fault.
Poly1 computeG(int p);

struct CurveData {
  int p;
  Rational Cp;
  Poly2 P;             // y^2 - g(x)
  Poly1 u, v;          // rational-curve parameterization in t
  Poly1 g;
  Rational centralCharge;
};

// Assembles and verifies the curve data. computeG()'s algebraic route runs
// for p <= maxAlgebraicP (it grows quickly with p); the closed form is
// always checked against the interpolation route.
CurveData curve(int p, int maxAlgebraicP = 4);

// Closed-form ingredients, usable without the vertex-algebra pipeline.
Rational curveConstant(int p);  // C_p = (4p)^{2p-1} / ((2p-1)!)^2
Poly1 curveU(int p);            // u(t) = t(t - 2(p-1)) / (4p)
Poly1 curveV(int p);            // v(t) = C(t, 2p-1)
Poly1 closedFormG(int p);
Poly2 curveP(int p);

// Eigenvalue of o(a) = a_{wt(a)-1} on the continuous highest-weight vector,
// as a polynomial in t (symbolic) or at a rational t (direct mode action).
Poly1 topLevelEvalSym(const FockVector& a);
Rational topLevelEvalAt(const FockVector& a, const Rational& t);

struct HighestWeightSample {
  Rational t, x, y;
};

// Sample table of the classification: (u(t), v(t)) for integer t in
// [0, 2p], each verified against P = 0.
std::vector<HighestWeightSample> classify(int p);

}  // namespace wb

#endif
