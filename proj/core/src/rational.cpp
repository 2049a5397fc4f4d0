#include "jetbracket/rational.hpp"

#include "jetbracket/errors.hpp"

namespace jetbracket {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw Error("malformed rational literal '" + text + "'");
    if (q.get_den() == 0) throw Error("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational pow_rational(const Rational& q, unsigned e) {
    Rational r = 1;
    Rational base = q;
    unsigned exp = e;
    while (exp > 0) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

}  // namespace jetbracket
