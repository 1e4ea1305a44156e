#ifndef WBOSON_POLY_HPP
#define WBOSON_POLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wboson/rational.hpp"

namespace wb {

// Sparse univariate polynomial over Rational. Zero polynomial has empty
// support; no stored zero coefficients.
class Poly1 {
 public:
  Poly1() = default;
  Poly1(const Rational& c) { set(0, c); }  // NOLINT: constants convert freely
  Poly1(long c) { set(0, Rational(c)); }   // NOLINT
  Poly1(int c) { set(0, Rational(c)); }    // NOLINT

  static Poly1 x() {
    Poly1 p;
    p.set(1, Rational(1));
    return p;
  }

  void set(long e, const Rational& c) {
    if (c.isZero())
      c_.erase(e);
    else
      c_[e] = c;
  }
  Rational coeff(long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rational(0) : it->second;
  }
  bool isZero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  long degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
  const std::map<long, Rational>& coeffs() const { return c_; }

  Poly1& operator+=(const Poly1& o) {
    for (const auto& [e, c] : o.c_) set(e, coeff(e) + c);
    return *this;
  }
  Poly1& operator-=(const Poly1& o) {
    for (const auto& [e, c] : o.c_) set(e, coeff(e) - c);
    return *this;
  }
  Poly1 operator-() const {
    Poly1 r;
    for (const auto& [e, c] : c_) r.c_.emplace(e, -c);
    return r;
  }
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b) {
    Poly1 r;
    for (const auto& [ea, ca] : a.c_)
      for (const auto& [eb, cb] : b.c_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
    return r;
  }
  Poly1& operator*=(const Poly1& o) { return *this = *this * o; }
  friend Poly1 operator*(const Rational& s, const Poly1& p) {
    Poly1 r;
    if (s.isZero()) return r;
    for (const auto& [e, c] : p.c_) r.c_.emplace(e, s * c);
    return r;
  }
  friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }
  friend bool operator<(const Poly1& a, const Poly1& b) { return a.c_ < b.c_; }

  Rational evaluate(const Rational& r) const {
    // Horner over the sparse support.
    Rational acc(0);
    long prev = -1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      if (prev >= 0)
        for (long i = it->first; i < prev; ++i) acc *= r;
      acc += it->second;
      prev = it->first;
    }
    if (prev > 0)
      for (long i = 0; i < prev; ++i) acc *= r;
    return acc;
  }

  // Composition: substitute a polynomial for the variable.
  Poly1 evaluate(const Poly1& q) const {
    Poly1 acc;
    long prev = -1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      if (prev >= 0)
        for (long i = it->first; i < prev; ++i) acc = acc * q;
      acc += Poly1(it->second);
      prev = it->first;
    }
    if (prev > 0)
      for (long i = 0; i < prev; ++i) acc = acc * q;
    return acc;
  }

  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += it->second.str();
      if (it->first > 0) out += "*" + var + "^" + std::to_string(it->first);
    }
    return out;
  }

 private:
  std::map<long, Rational> c_;
};

// C(t, r) as a polynomial in t.
inline Poly1 binomialPoly(long r) {
  Poly1 acc(Rational(1));
  for (long i = 0; i < r; ++i) acc = acc * (Poly1::x() - Poly1(Rational(i)));
  return Rational(mpz_class(1), factorialZ(r)) * acc;
}

// Sparse bivariate polynomial; key is the exponent pair (x-exp, y-exp).
class Poly2 {
 public:
  Poly2() = default;

  void set(long ex, long ey, const Rational& c) {
    auto k = std::make_pair(ex, ey);
    if (c.isZero())
      c_.erase(k);
    else
      c_[k] = c;
  }
  Rational coeff(long ex, long ey) const {
    auto it = c_.find({ex, ey});
    return it == c_.end() ? Rational(0) : it->second;
  }
  bool isZero() const { return c_.empty(); }
  long degY() const {
    long d = -1;
    for (const auto& [k, c] : c_) d = std::max(d, k.second);
    return d;
  }
  const std::map<std::pair<long, long>, Rational>& coeffs() const { return c_; }

  static Poly2 fromX(const Poly1& p) {
    Poly2 r;
    for (const auto& [e, c] : p.coeffs()) r.set(e, 0, c);
    return r;
  }
  static Poly2 y() {
    Poly2 r;
    r.set(0, 1, Rational(1));
    return r;
  }

  Poly2& operator+=(const Poly2& o) {
    for (const auto& [k, c] : o.c_) set(k.first, k.second, coeff(k.first, k.second) + c);
    return *this;
  }
  Poly2& operator-=(const Poly2& o) {
    for (const auto& [k, c] : o.c_) set(k.first, k.second, coeff(k.first, k.second) - c);
    return *this;
  }
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ka, ca] : a.c_)
      for (const auto& [kb, cb] : b.c_) {
        long ex = ka.first + kb.first, ey = ka.second + kb.second;
        r.set(ex, ey, r.coeff(ex, ey) + ca * cb);
      }
    return r;
  }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

  Rational evaluate(const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (const auto& [k, c] : c_) {
      Rational term = c;
      for (long i = 0; i < k.first; ++i) term *= x;
      for (long i = 0; i < k.second; ++i) term *= y;
      acc += term;
    }
    return acc;
  }

  // Substitute univariate polynomials for both variables.
  Poly1 evaluate(const Poly1& x, const Poly1& y) const {
    Poly1 acc;
    for (const auto& [k, c] : c_) {
      Poly1 term(c);
      for (long i = 0; i < k.first; ++i) term = term * x;
      for (long i = 0; i < k.second; ++i) term = term * y;
      acc += term;
    }
    return acc;
  }

  // Coefficient of y^ey as a polynomial in x.
  Poly1 yCoefficient(long ey) const {
    Poly1 r;
    for (const auto& [k, c] : c_)
      if (k.second == ey) r.set(k.first, c);
    return r;
  }

 private:
  std::map<std::pair<long, long>, Rational> c_;
};

// Division in y by a divisor monic in y: a = q*d + r with deg_y(r) < deg_y(d).
struct DivY {
  Poly2 quotient;
  Poly2 remainder;
};
inline DivY divideInY(const Poly2& a, const Poly2& d) {
  long dd = d.degY();
  if (dd < 0 || d.yCoefficient(dd) != Poly1(Rational(1)))
    throw std::invalid_argument("divideInY: divisor must be monic in y");
  Poly2 rem = a, quot;
  while (rem.degY() >= dd) {
    long rd = rem.degY();
    Poly1 lead = rem.yCoefficient(rd);
    Poly2 term = Poly2::fromX(lead);
    Poly2 shift;
    shift.set(0, rd - dd, Rational(1));
    term = term * shift;
    quot += term;
    rem -= term * d;
  }
  return {quot, rem};
}

// Lagrange interpolation through distinct nodes.
inline Poly1 interpolate(const std::vector<std::pair<Rational, Rational>>& pts) {
  Poly1 acc;
  for (size_t i = 0; i < pts.size(); ++i) {
    Poly1 li(Rational(1));
    Rational denom(1);
    for (size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      li = li * (Poly1::x() - Poly1(pts[j].first));
      denom *= pts[i].first - pts[j].first;
    }
    acc += (pts[i].second / denom) * li;
  }
  return acc;
}

}  // namespace wb

#endif
