#pragma once

#include <vector>

#include "jetbracket/rational.hpp"

namespace jetbracket {

using QMatrix = std::vector<std::vector<Rational>>;

/// Determinant by fraction-full Gaussian elimination over the rationals.
Rational gauss_determinant(QMatrix a);

/// Determinant by fraction-free Bareiss elimination over the integers after
/// clearing denominators row by row. Kept algorithmically independent of
/// gauss_determinant so certificates can be cross-checked on two routes.
Rational bareiss_determinant(const QMatrix& a);

}  // namespace jetbracket
