#pragma once

#include <string>

#include "jetbracket/multi_cdiff.hpp"
#include "jetbracket/symbols.hpp"

namespace jetbracket {

/// Text forms that re-parse to the same objects: "u2_x1x1", "6*u*u_x + u_xxx",
/// "D_xxx + 4*u*D_x + 2*u_x". n and m pick the display names: bases print as
/// "x" when n == 1 and "x1..xn" otherwise, dependents as "u" vs "u1..um".
std::string coordinate_name(const JetCoordinate& c, int n, int m);
std::string subscript_name(const MultiIndex& sigma);

std::string to_text(const DiffPoly& p, int n, int m);
std::string to_text(const CDiffEntry& e, int n, int m);
std::string to_text(const CDiffOperator& op);
std::string to_text(const MultiCDiffOperator& op);

/// theta-polynomials print as display-only expressions in theta (one block)
/// or theta[p]_d (multilinear blocks).
std::string to_text(const SymbolPoly& p, int blocks = 1);

std::string to_text(const PointAssignment& rho, int n, int m);
std::string to_text(const std::vector<Rational>& v);

}  // namespace jetbracket
