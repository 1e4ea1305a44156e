#include "wboson/partition.hpp"

namespace wb {
namespace {

void gen(int n, int maxPart, int minPart, Partition& cur,
         std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, maxPart); k >= minPart; --k) {
    cur.push_back(k);
    gen(n - k, k, minPart, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitionsOf(int n, int minPart, int maxPart) {
  if (n < 0) return {};
  if (maxPart < 0) maxPart = n;
  std::vector<Partition> out;
  Partition cur;
  gen(n, maxPart, minPart, cur, out);
  return out;
}

std::string partitionStr(const Partition& p) {
  if (p.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < p.size()) {
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    out += "b(-" + std::to_string(p[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace wb
