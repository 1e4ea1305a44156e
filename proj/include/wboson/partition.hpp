#ifndef WBOSON_PARTITION_HPP
#define WBOSON_PARTITION_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace wb {

// Weakly decreasing list of positive integers; the empty partition is the
// vacuum monomial.
using Partition = std::vector<int>;

inline int level(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

// Canonical basis order: by level, then reverse-lexicographic, so that at a
// fixed level (n) comes before (n-1,1) ... before (1,...,1).
struct PartLess {
  bool operator()(const Partition& a, const Partition& b) const {
    int la = level(a), lb = level(b);
    if (la != lb) return la < lb;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

// All partitions of n with parts in [minPart, maxPart], in canonical order.
std::vector<Partition> partitionsOf(int n, int minPart = 1, int maxPart = -1);

// Text form "b(-3)^2b(-1)"; the empty partition renders as "1".
std::string partitionStr(const Partition& p);

}  // namespace wb

#endif
