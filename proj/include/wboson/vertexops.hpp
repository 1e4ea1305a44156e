#ifndef WBOSON_VERTEXOPS_HPP
#define WBOSON_VERTEXOPS_HPP

#include <algorithm>
#include <map>
#include <tuple>
#include <type_traits>
#include <vector>

#include "wboson/fock.hpp"

namespace wb {

// Lattice pairing <c*beta, c'*beta> = 2cc'/p in beta-units; must be integral
// for integral-mode operators.
inline long latticePairing(int p, int c, int cprime) {
  long num = 2L * c * cprime;
  if (num % p != 0)
    throw std::domain_error("lattice pairing is not integral in this sector");
  return num / p;
}

// S_r(h(-1), h(-2), ...)1 with h = scale*beta, from the generating function
// exp(sum_n (x_n/n) y^n).
FockVector schurVector(int p, int r, int scale);

// Coefficient of z^{<gamma,delta>+k} of E^-(gamma,z)E^+(gamma,z) e^gamma
// acting on a vector in lattice sector delta; gamma = cgamma*beta.
FockVector expModeApply(int cgamma, long k, const FockVector& v);

// Paper-convention mode e^gamma_s for integral s (requires integral pairing).
FockVector expModePaper(int cgamma, long s, const FockVector& v);

// Q = e^alpha_0; raises the charge by p, preserves conformal weight.
FockVector screenQ(const FockVector& v);

// Qtilde = e^{-beta}_0; lowers the charge by 1. Defined only on sectors
// where <-beta, delta> is integral (charge a multiple of p, or p | 2m).
FockVector screenQtilde(const FockVector& v);

namespace detail {

// Memoized mode recursion for the n-th product. Peels creation modes of the
// left factor one at a time; base case is the pure exponential.
template <class K>
class ProductCtx {
 public:
  ProductCtx(int p, int cgamma, long pairInt, std::vector<int> parts,
             const Sector<K>& bSector, const Sector<K>& outSector)
      : p_(p),
        cgamma_(cgamma),
        pair_(pairInt),
        parts_(std::move(parts)),
        bSector_(bSector),
        outSector_(outSector) {
    suffix_.assign(parts_.size() + 1, 0);
    for (size_t i = parts_.size(); i-- > 0;)
      suffix_[i] = suffix_[i + 1] + parts_[i];
  }

  FockVec<K> run(long n, const FockVec<K>& b) { return modeVec(0, n, b); }

 private:
  FockVec<K> basisVec(const Partition& w) const {
    FockVec<K> v(bSector_);
    v.addTerm(w, K(Rational(1)));
    return v;
  }

  FockVec<K> modeVec(size_t idx, long k, const FockVec<K>& v) {
    FockVec<K> acc(outSector_);
    for (const auto& [w, c] : v.terms()) {
      FockVec<K> t = modeBasis(idx, k, w);
      if (!t.isZero()) acc += c * t;
    }
    return acc;
  }

  FockVec<K> modeBasis(size_t idx, long k, const Partition& w) {
    // Output level from weight bookkeeping; sector deltas cancel.
    long outLevel = suffix_[idx] + level(w) - k - 1 - pair_;
    if (outLevel < 0) return FockVec<K>(outSector_);
    auto key = std::make_tuple(idx, k, w);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;

    FockVec<K> acc(outSector_);
    if (idx == parts_.size()) {
      if (cgamma_ == 0) {
        if (k == -1) acc = basisVec(w);
      } else {
        if constexpr (std::is_same_v<K, Rational>) {
          acc = expModeApply(cgamma_, -pair_ - k - 1, basisVec(w));
        } else {
          throw std::domain_error(
              "product: charged left factor requires a lattice sector");
        }
      }
    } else {
      int m = parts_[idx];
      // Annihilation side: j >= 0, applied to w first.
      Rational sgn = (m % 2 == 0) ? Rational(-1) : Rational(1);
      for (int j = 0; j <= level(w); ++j) {
        Rational coef = sgn * binomialNat(j + m - 1, m - 1);
        if (coef.isZero()) continue;
        FockVec<K> hv = heis(j, basisVec(w));
        if (hv.isZero()) continue;
        FockVec<K> inner = modeVec(idx + 1, k - m - j, hv);
        if (!inner.isZero()) acc += K(coef) * inner;
      }
      // Creation side: j <= -m, applied after the inner mode.
      long jmin = k - m + 1 + pair_ - suffix_[idx + 1] - level(w);
      for (long j = -m; j >= jmin; --j) {
        Rational coef = binomialNat(-j - 1, m - 1);
        if (coef.isZero()) continue;
        FockVec<K> inner = modeBasis(idx + 1, k - m - j, w);
        if (!inner.isZero()) acc += K(coef) * heis(static_cast<int>(j), inner);
      }
    }
    memo_.emplace(std::move(key), acc);
    return acc;
  }

  int p_;
  int cgamma_;
  long pair_;
  std::vector<int> parts_;
  Sector<K> bSector_;
  Sector<K> outSector_;
  std::vector<long> suffix_;
  std::map<std::tuple<size_t, long, Partition>, FockVec<K>> memo_;
};

}  // namespace detail

// Generic n-th product a_n b. The left factor is a (Fock polynomial) times a
// lattice exponential; the right factor may live in any sector with integral
// pairing against the left charge.
template <class K>
FockVec<K> product(const FockVector& a, long n, const FockVec<K>& b) {
  if (a.isZero() || b.isZero()) {
    FockVec<K> z;
    return z;
  }
  if (a.sector().kind != SectorKind::Lattice)
    throw std::invalid_argument("product: left factor must be a lattice vector");
  int p = a.sector().p;
  int c = a.sector().charge;
  long pairInt = 0;
  Sector<K> outSector;
  if (b.sector().kind == SectorKind::Lattice) {
    pairInt = latticePairing(p, c, b.sector().charge);
    if constexpr (std::is_same_v<K, Rational>) {
      outSector = latticeSector(p, b.sector().charge + c);
    } else {
      throw std::invalid_argument("product: lattice sector requires Rational");
    }
  } else {
    if (c != 0)
      throw std::domain_error(
          "product: charged left factor undefined on continuous sectors");
    outSector = b.sector();
  }
  FockVec<K> acc(outSector);
  for (const auto& [mu, coef] : a.terms()) {
    detail::ProductCtx<K> ctx(p, c, pairInt, mu, b.sector(), outSector);
    FockVec<K> t = ctx.run(n, b);
    if (!t.isZero()) acc += K(coef) * t;
  }
  return acc;
}

// (L(-1)a)_n v == -n a_{n-1} v on every vector of the panel.
bool lminus1DerivativeCheck(const FockVector& a, long n,
                            const std::vector<FockVector>& panel);

}  // namespace wb

#endif
