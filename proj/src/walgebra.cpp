#include "wboson/walgebra.hpp"

#include <algorithm>

#include "wboson/util.hpp"

namespace wb {

Generators makeGenerators(int p) {
  FockVector F = FockVector::vacuum(latticeSector(p, -p));
  FockVector H = screenQ(F);
  FockVector E = screenQ(H);
  return {F, H, E};
}

std::string screeningOpName(ScreeningOp op) {
  return op == ScreeningOp::Q ? "Q" : "Qtilde";
}

FockVector singularVector(int p, int n) {
  if (n < 0) throw std::invalid_argument("singularVector: n >= 0");
  FockVector v = FockVector::vacuum(latticeSector(p, -n * p));
  for (int j = 0; j < n; ++j) v = screenQ(v);
  return v;
}

namespace {

FockVector fromCoords(const std::vector<Rational>& x,
                      const std::vector<Partition>& basis,
                      const Sector<Rational>& s) {
  FockVector v(s);
  for (size_t i = 0; i < basis.size(); ++i)
    if (!x[i].isZero()) v.addTerm(basis[i], x[i]);
  return v;
}

FockVector applyScreening(ScreeningOp op, const FockVector& v) {
  return op == ScreeningOp::Q ? screenQ(v) : screenQtilde(v);
}

}  // namespace

std::vector<Rational> coords(const FockVector& v,
                             const std::vector<Partition>& basis) {
  std::vector<Rational> x(basis.size(), Rational(0));
  for (size_t i = 0; i < basis.size(); ++i) x[i] = v.coeff(basis[i]);
  return x;
}

FockVector cosingularWitness(int p, int n) {
  if (n < 1) throw std::invalid_argument("cosingularWitness: n >= 1");
  int weight = n * n * p - n * p + n;
  Sector<Rational> src = latticeSector(p, 0);
  int srcLevel = weight;  // charge-0 delta is 0
  auto srcBasis = basisPartitions(srcLevel);

  // Target e^{n alpha}: the vacuum of charge np, same conformal weight.
  Sector<Rational> dst = latticeSector(p, n * p);
  FockVector target = FockVector::vacuum(dst);
  auto dstBasis = basisPartitions(0);

  SparseMatrix M(static_cast<long>(dstBasis.size()),
                 static_cast<long>(srcBasis.size()));
  for (size_t j = 0; j < srcBasis.size(); ++j) {
    FockVector col(src);
    col.addTerm(srcBasis[j], Rational(1));
    for (int step = 0; step < n; ++step) col = screenQ(col);
    auto cx = coords(col, dstBasis);
    for (size_t i = 0; i < dstBasis.size(); ++i)
      if (!cx[i].isZero()) M.set(static_cast<long>(i), static_cast<long>(j), cx[i]);
  }
  auto sol = solve(M, coords(target, dstBasis));
  if (!sol)
    throw std::logic_error("cosingularWitness: inconsistent system");
  FockVector w = fromCoords(*sol, srcBasis, src);
  if (screenQtilde(w).isZero())
    throw std::logic_error("cosingularWitness: witness lies in ker Qtilde");
  return w;
}

KernelBasis kernel(int p, ScreeningOp op, int level, int jobs) {
  Sector<Rational> src = latticeSector(p, 0);
  auto srcBasis = basisPartitions(level);
  long cols = static_cast<long>(srcBasis.size());
  // Both screening charges have weight 1, so the target level is N-1.
  long rows = level >= 1 ? static_cast<long>(basisPartitions(level - 1).size()) : 0;
  auto dstBasis = basisPartitions(level - 1 >= 0 ? level - 1 : 0);

  std::vector<std::vector<Rational>> colData(cols);
  parallelFor(cols, jobs, [&](long j) {
    FockVector bv(src);
    bv.addTerm(srcBasis[j], Rational(1));
    FockVector img = applyScreening(op, bv);
    colData[j] = level >= 1 ? coords(img, dstBasis) : std::vector<Rational>{};
  });

  SparseMatrix M(rows, cols);
  for (long j = 0; j < cols; ++j)
    for (long i = 0; i < rows; ++i)
      if (!colData[j][i].isZero()) M.set(i, j, colData[j][i]);

  KernelBasis out{op, level, {}};
  for (const auto& x : nullspace(M))
    out.vectors.push_back(fromCoords(x, srcBasis, src));
  return out;
}

std::vector<FockVector> virasoroWordVectors(const std::vector<FockVector>& seeds,
                                            int N) {
  std::vector<FockVector> out;
  for (const auto& seed : seeds) {
    if (seed.isZero()) continue;
    int ws = seed.maxLevel();  // charge-0 seeds: weight == level
    if (ws > N) continue;
    for (const auto& word : partitionsOf(N - ws)) {
      FockVector v = seed;
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        v = virasoro(-*it, v);
      if (!v.isZero()) out.push_back(v);
    }
  }
  return out;
}

std::vector<FockVector> virasoroSpanBasis(const std::vector<FockVector>& seeds,
                                          int N) {
  auto basis = basisPartitions(N);
  SpanBuilder span(static_cast<long>(basis.size()));
  std::vector<FockVector> out;
  for (const auto& v : virasoroWordVectors(seeds, N))
    if (span.add(coords(v, basis))) out.push_back(v);
  return out;
}

long virasoroSpanDim(const std::vector<FockVector>& seeds, int N) {
  auto basis = basisPartitions(N);
  SpanBuilder span(static_cast<long>(basis.size()));
  for (const auto& v : virasoroWordVectors(seeds, N))
    span.add(coords(v, basis));
  return span.rank();
}

FockVector pbwWordVector(int p, const std::vector<int>& parts) {
  FockVector v = FockVector::vacuum(latticeSector(p, 0));
  for (auto it = parts.rbegin(); it != parts.rend(); ++it)
    v = virasoro(-*it, v);
  return v;
}

std::vector<VirasoroWord> expressInPbw(const FockVector& v,
                                       bool reverseWordOrder) {
  if (v.isZero()) return {};
  if (v.sector().kind != SectorKind::Lattice || v.sector().charge != 0)
    throw std::invalid_argument("expressInPbw: charge-0 vectors only");
  int p = v.sector().p;

  std::vector<VirasoroWord> out;
  for (int w = 0; w <= v.maxLevel(); ++w) {
    FockVector comp = v.levelComponent(w);
    if (comp.isZero()) continue;
    auto words = partitionsOf(w, 2);
    if (reverseWordOrder) std::reverse(words.begin(), words.end());
    auto basis = basisPartitions(w);
    SparseMatrix M(static_cast<long>(basis.size()),
                   static_cast<long>(words.size()));
    for (size_t j = 0; j < words.size(); ++j) {
      auto cx = coords(pbwWordVector(p, words[j]), basis);
      for (size_t i = 0; i < basis.size(); ++i)
        if (!cx[i].isZero())
          M.set(static_cast<long>(i), static_cast<long>(j), cx[i]);
    }
    auto sol = solve(M, coords(comp, basis));
    if (!sol)
      throw std::logic_error("expressInPbw: vector is not a PBW combination");
    for (size_t j = 0; j < words.size(); ++j)
      if (!(*sol)[j].isZero()) out.push_back({words[j], (*sol)[j]});
  }
  return out;
}

bool hihMembership(int p, long i) {
  if (i < -2 * p) throw std::invalid_argument("hihMembership: i >= -2p");
  Generators gen = makeGenerators(p);
  FockVector hih = product(gen.H, i, gen.H);
  return screenQ(hih).isZero();
}

bool spanningCheck(int p, int N, int jobs) {
  auto basis = basisPartitions(N);
  KernelBasis ker = kernel(p, ScreeningOp::Qtilde, N, jobs);
  SpanBuilder kerSpan(static_cast<long>(basis.size()));
  for (const auto& v : ker.vectors) kerSpan.add(coords(v, basis));

  Generators gen = makeGenerators(p);
  int hWt = 2 * p - 1;
  SpanBuilder famSpan(static_cast<long>(basis.size()));

  // Enumerate H-mode words H_{-n1}...H_{-nt}1 of weight sum(n_j + 2p - 2),
  // then fill up with L words of weight >= 2.
  std::vector<std::vector<int>> hWords{{}};
  for (const auto& hw : partitionsOf(N)) {
    // Interpret hw as a candidate (n_j + 2p - 2) multiset only when every
    // part is >= 2p - 1; recover n_j = part - (2p - 2) >= 1.
    bool ok = std::all_of(hw.begin(), hw.end(),
                          [&](int x) { return x >= hWt; });
    if (!ok || hw.empty()) continue;
    std::vector<int> ns;
    for (int x : hw) ns.push_back(x - (2 * p - 2));
    hWords.push_back(ns);
  }
  // Partial H-weights below N as well.
  for (int wsum = 1; wsum < N; ++wsum) {
    for (const auto& hw : partitionsOf(wsum)) {
      bool ok = std::all_of(hw.begin(), hw.end(),
                            [&](int x) { return x >= hWt; });
      if (!ok || hw.empty()) continue;
      std::vector<int> ns;
      for (int x : hw) ns.push_back(x - (2 * p - 2));
      hWords.push_back(ns);
    }
  }

  for (const auto& ns : hWords) {
    FockVector base = FockVector::vacuum(latticeSector(p, 0));
    int used = 0;
    for (auto it = ns.rbegin(); it != ns.rend(); ++it) {
      base = product(gen.H, -*it, base);
      used += *it + 2 * p - 2;
    }
    if (base.isZero()) continue;
    for (const auto& word : partitionsOf(N - used, 2)) {
      FockVector v = base;
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        v = virasoro(-*it, v);
      if (v.isZero()) continue;
      auto cx = coords(v, basis);
      // Every family vector must already lie in ker Qtilde.
      if (!kerSpan.contains(cx)) return false;
      famSpan.add(cx);
    }
  }
  return famSpan.rank() == kerSpan.rank();
}

}  // namespace wb
