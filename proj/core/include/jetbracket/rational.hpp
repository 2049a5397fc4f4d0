#pragma once

#include <gmpxx.h>

#include <string>

namespace jetbracket {

/// Exact rational scalar with arbitrary-precision integer parts. Every
/// coefficient in the engine is one of these; there is no floating point
/// anywhere in the core, so "residual equals zero" is a proof, not a
/// tolerance.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "12", "-3", "3/4", "-5/2". Throws Error on malformed input or a
/// zero denominator.
Rational rational_from_string(const std::string& text);

/// Canonical form "p/q" with q > 0, or "p" for integers.
inline std::string to_string(const Rational& q) { return q.get_str(); }

Integer binomial(unsigned n, unsigned k);

/// q^e for e >= 0.
Rational pow_rational(const Rational& q, unsigned e);

}  // namespace jetbracket
