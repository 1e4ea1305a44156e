#ifndef WBOSON_FOCK_HPP
#define WBOSON_FOCK_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "wboson/partition.hpp"
#include "wboson/poly.hpp"
#include "wboson/rational.hpp"

namespace wb {

inline bool scalarIsZero(const Rational& r) { return r.isZero(); }
inline bool scalarIsZero(const Poly1& p) { return p.isZero(); }

struct ModelParams {
  int p;
  Rational centralCharge;

  static ModelParams make(int p) {
    if (p < 2) throw std::invalid_argument("ModelParams: p must be >= 2");
    Rational shift = Rational(6 * (p - 1) * (p - 1), p);
    return {p, Rational(1) - shift};
  }
};

enum class SectorKind { Lattice, Continuous };

// Charge sector of the lattice extension, or the continuous highest-weight
// sector M(1,lambda). All mode formulas depend only on the beta(0)
// eigenvalue b0; delta is the conformal weight of the sector's vacuum.
template <class K>
struct Sector {
  SectorKind kind = SectorKind::Lattice;
  int charge = 0;  // multiple of beta; meaningful for Lattice only
  int p = 2;
  K b0{};
  K delta{};

  friend bool operator==(const Sector& a, const Sector& b) {
    if (a.kind != b.kind || a.p != b.p) return false;
    if (a.kind == SectorKind::Lattice) return a.charge == b.charge;
    return !scalarIsZero(a.b0 - b.b0) ? false : true;
  }
  friend bool operator!=(const Sector& a, const Sector& b) { return !(a == b); }
};

template <class K>
K sectorDelta(int p, const K& b0) {
  return K(Rational(p, 4)) * b0 * b0 - K(Rational(p - 1, 2)) * b0;
}

inline Sector<Rational> latticeSector(int p, int charge) {
  Sector<Rational> s;
  s.kind = SectorKind::Lattice;
  s.charge = charge;
  s.p = p;
  s.b0 = Rational(2 * charge, p);
  s.delta = sectorDelta(p, s.b0);
  return s;
}

// Continuous sector keyed by t = <lambda, alpha>; b0 = t/p.
template <class K>
Sector<K> continuousSector(int p, const K& t) {
  Sector<K> s;
  s.kind = SectorKind::Continuous;
  s.charge = 0;
  s.p = p;
  s.b0 = K(Rational(1, p)) * t;
  s.delta = sectorDelta(p, s.b0);
  return s;
}

// Finite linear combination of partition monomials attached to one sector.
template <class K>
class FockVec {
 public:
  FockVec() = default;
  explicit FockVec(const Sector<K>& s) : sector_(s) {}

  static FockVec vacuum(const Sector<K>& s) {
    FockVec v(s);
    v.addTerm({}, K(Rational(1)));
    return v;
  }

  const Sector<K>& sector() const { return sector_; }
  const std::map<Partition, K, PartLess>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  void addTerm(const Partition& m, const K& c) {
    auto it = terms_.find(m);
    K nv = (it == terms_.end()) ? c : K(it->second + c);
    if (scalarIsZero(nv))
      terms_.erase(m);
    else
      terms_[m] = nv;
  }

  K coeff(const Partition& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K{} : it->second;
  }

  int maxLevel() const {
    int m = 0;
    for (const auto& [part, c] : terms_) m = std::max(m, level(part));
    return m;
  }

  FockVec levelComponent(int lvl) const {
    FockVec r(sector_);
    for (const auto& [part, c] : terms_)
      if (level(part) == lvl) r.addTerm(part, c);
    return r;
  }

  FockVec& operator+=(const FockVec& o) {
    requireSameSector(o);
    if (isZero()) sector_ = o.sector_;
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
  }
  FockVec& operator-=(const FockVec& o) {
    requireSameSector(o);
    if (isZero()) sector_ = o.sector_;
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
  }
  friend FockVec operator+(FockVec a, const FockVec& b) { return a += b; }
  friend FockVec operator-(FockVec a, const FockVec& b) { return a -= b; }
  friend FockVec operator*(const K& s, const FockVec& v) {
    FockVec r(v.sector_);
    if (scalarIsZero(s)) return r;
    for (const auto& [m, c] : v.terms_) r.addTerm(m, K(s * c));
    return r;
  }
  friend bool operator==(const FockVec& a, const FockVec& b) {
    if (a.isZero() && b.isZero()) return true;
    return a.sector_ == b.sector_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const FockVec& a, const FockVec& b) { return !(a == b); }

 private:
  void requireSameSector(const FockVec& o) const {
    if (isZero() || o.isZero()) return;
    if (!(sector_ == o.sector_))
      throw std::invalid_argument("FockVec: mixed sectors");
  }
  Sector<K> sector_;
  std::map<Partition, K, PartLess> terms_;
};

using FockVector = FockVec<Rational>;

// beta(n) action: n < 0 multiplies by a creation mode, n = 0 scales by the
// sector's b0, n > 0 annihilates via [beta(n), beta(-n)] = (2n/p) id.
template <class K>
FockVec<K> heis(int n, const FockVec<K>& v) {
  FockVec<K> r(v.sector());
  if (v.isZero()) return r;
  int p = v.sector().p;
  if (n == 0) return v.sector().b0 * v;
  for (const auto& [part, c] : v.terms()) {
    if (n < 0) {
      Partition m = part;
      m.insert(std::upper_bound(m.begin(), m.end(), -n, std::greater<int>()), -n);
      r.addTerm(m, c);
    } else {
      int mult = static_cast<int>(std::count(part.begin(), part.end(), n));
      if (mult == 0) continue;
      Partition m = part;
      m.erase(std::find(m.begin(), m.end(), n));
      r.addTerm(m, K(Rational(2L * n * mult, p)) * c);
    }
  }
  return r;
}

// L(n) = (p/4) sum_j :beta(j)beta(n-j): - ((p-1)/2)(n+1) beta(n).
// Normal order: creation modes left of annihilation modes, beta(0) on the
// annihilation side.
template <class K>
FockVec<K> virasoro(int n, const FockVec<K>& v) {
  FockVec<K> acc(v.sector());
  if (v.isZero()) return acc;
  int p = v.sector().p;
  int L = v.maxLevel();
  int bound = L + std::abs(n) + 1;
  for (int j = -bound; j <= bound; ++j) {
    int k = n - j;
    // Apply the larger index first (annihilation side).
    int first = std::max(j, k), second = std::min(j, k);
    FockVec<K> t = heis(second, heis(first, v));
    if (!t.isZero()) acc += t;
  }
  FockVec<K> quad = Rational(p, 4) * acc;
  FockVec<K> lin = Rational(-(p - 1) * (n + 1), 2) * heis(n, v);
  return quad + lin;
}

// [L(m), L(n)] v  ==  (m-n) L(m+n) v + delta_{m+n,0} (m^3-m)/12 c v, exactly.
template <class K>
bool virasoroBracketCheck(int m, int n, const FockVec<K>& v) {
  FockVec<K> lhs = virasoro(m, virasoro(n, v)) - virasoro(n, virasoro(m, v));
  FockVec<K> rhs = Rational(m - n) * virasoro(m + n, v);
  if (m + n == 0 && !v.isZero()) {
    Rational c = ModelParams::make(v.sector().p).centralCharge;
    rhs += (Rational(static_cast<long>(m) * m * m - m, 12) * c) * v;
  }
  return lhs == rhs;
}

// Partitions of `lvl` in canonical order; the graded basis of every sector.
inline std::vector<Partition> basisPartitions(int lvl) {
  return partitionsOf(lvl);
}

}  // namespace wb

#endif
