#ifndef WBOSON_WALGEBRA_HPP
#define WBOSON_WALGEBRA_HPP

#include <string>
#include <vector>

#include "wboson/linalg.hpp"
#include "wboson/vertexops.hpp"

namespace wb {

// F = e^{-alpha}, H = QF, E = Q^2 F; all of conformal weight 2p-1.
struct Generators {
  FockVector F, H, E;
};
Generators makeGenerators(int p);

enum class ScreeningOp { Q, Qtilde };
std::string screeningOpName(ScreeningOp op);

// u_n = Q^n e^{-n alpha}: charge-0 singular vector of weight n^2 p + np - n.
FockVector singularVector(int p, int n);

// Some w with Q^n w = e^{n alpha}, by exact linear solve at weight
// n^2 p - np + n in the charge-0 sector; also requires Qtilde w != 0.
// Solver inconsistency is a fault: it would contradict the structure of
// M(1) as a Virasoro module.
FockVector cosingularWitness(int p, int n);

struct KernelBasis {
  ScreeningOp op;
  int level;
  std::vector<FockVector> vectors;  // charge-0, deterministic order
};

// Exact nullspace of the screening operator's matrix from the charge-0
// level-N basis into the target sector (target level N-1).
KernelBasis kernel(int p, ScreeningOp op, int level, int jobs = 1);

// Coordinates in the canonical partition basis of the vector's level.
std::vector<Rational> coords(const FockVector& v,
                             const std::vector<Partition>& basis);

// All word vectors L(-n1)...L(-ns) seed at conformal weight N, canonical
// word order, seeds in the given order. L(-1) words are enumerated; on the
// vacuum they vanish and do not affect the span.
std::vector<FockVector> virasoroWordVectors(const std::vector<FockVector>& seeds,
                                            int N);

// Greedy maximal independent subset of the word family at weight N.
std::vector<FockVector> virasoroSpanBasis(const std::vector<FockVector>& seeds,
                                          int N);
long virasoroSpanDim(const std::vector<FockVector>& seeds, int N);

struct VirasoroWord {
  std::vector<int> parts;  // weakly decreasing, parts >= 2
  Rational coeff;
};

// The PBW word L(-n1)...L(-ns)1 as a vector of M(1).
FockVector pbwWordVector(int p, const std::vector<int>& parts);

// Express a ker-Q vector as a combination of PBW words, one deterministic
// representative (free variables zero under the fixed word order; the order
// can be reversed to exercise representative independence downstream).
std::vector<VirasoroWord> expressInPbw(const FockVector& v,
                                       bool reverseWordOrder = false);

// Q(H_i H) == 0, for i >= -2p.
bool hihMembership(int p, long i);

// Span of {L(-m1)...L(-ms) H_{-n1}...H_{-nt} 1 : m_i >= 2, n_j >= 1} at
// level N equals ker Qtilde at level N.
bool spanningCheck(int p, int N, int jobs = 1);

inline int defaultMaxLevel(int p) { return 2 * (2 * p - 1) + 2; }

}  // namespace wb

#endif
