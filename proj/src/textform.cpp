#include "wboson/textform.hpp"

#include <sstream>

namespace wb {

std::string fockVectorStr(const FockVector& v) {
  if (v.sector().kind != SectorKind::Lattice)
    throw std::invalid_argument("fockVectorStr: lattice sectors only");
  std::string sector = "@q" + std::to_string(v.sector().charge);
  if (v.isZero()) return "0 " + sector;
  std::string out;
  for (const auto& [part, c] : v.terms()) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*" + partitionStr(part);
  }
  return out + " " + sector;
}

namespace {

Partition parseMonomial(const std::string& s) {
  if (s == "1") return {};
  Partition p;
  size_t i = 0;
  while (i < s.size()) {
    if (s.compare(i, 3, "b(-") != 0)
      throw std::invalid_argument("parseFockVector: bad monomial '" + s + "'");
    i += 3;
    size_t close = s.find(')', i);
    if (close == std::string::npos)
      throw std::invalid_argument("parseFockVector: bad monomial '" + s + "'");
    int n = std::stoi(s.substr(i, close - i));
    i = close + 1;
    int e = 1;
    if (i < s.size() && s[i] == '^') {
      size_t j = i + 1, k = j;
      while (k < s.size() && isdigit(s[k])) ++k;
      e = std::stoi(s.substr(j, k - j));
      i = k;
    }
    if (n <= 0 || e <= 0)
      throw std::invalid_argument("parseFockVector: bad monomial '" + s + "'");
    for (int r = 0; r < e; ++r) p.push_back(n);
  }
  for (size_t k = 1; k < p.size(); ++k)
    if (p[k] > p[k - 1])
      throw std::invalid_argument("parseFockVector: parts not descending");
  return p;
}

}  // namespace

FockVector parseFockVector(const std::string& line, int p) {
  size_t at = line.rfind(" @q");
  if (at == std::string::npos)
    throw std::invalid_argument("parseFockVector: missing sector tag");
  int charge = std::stoi(line.substr(at + 3));
  FockVector v(latticeSector(p, charge));
  std::string body = line.substr(0, at);
  if (body == "0") return v;

  size_t pos = 0;
  while (pos < body.size()) {
    size_t next = body.find(" + ", pos);
    std::string term =
        body.substr(pos, next == std::string::npos ? next : next - pos);
    size_t star = term.find('*');
    if (star == std::string::npos)
      throw std::invalid_argument("parseFockVector: bad term '" + term + "'");
    Rational c = Rational::fromString(term.substr(0, star));
    Partition mono = parseMonomial(term.substr(star + 1));
    v.addTerm(mono, c);
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return v;
}

}  // namespace wb
