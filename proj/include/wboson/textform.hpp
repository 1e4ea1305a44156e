#ifndef WBOSON_TEXTFORM_HPP
#define WBOSON_TEXTFORM_HPP

#include <string>

#include "wboson/fock.hpp"

namespace wb {

// Canonical text form of a lattice-sector vector, e.g.
//   "-3/2*b(-2)^2b(-1) + 1*b(-5) @q0"
// Terms appear in canonical basis order; the zero vector is "0 @q<m>".
std::string fockVectorStr(const FockVector& v);

// Exact inverse of fockVectorStr for the given p. Throws on malformed text.
FockVector parseFockVector(const std::string& line, int p);

}  // namespace wb

#endif
