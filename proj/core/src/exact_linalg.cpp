#include "jetbracket/exact_linalg.hpp"

#include "jetbracket/errors.hpp"

namespace jetbracket {

namespace {

void require_square(const QMatrix& a) {
    for (const auto& row : a)
        if (row.size() != a.size()) throw Error("determinant: matrix must be square");
}

}  // namespace

Rational gauss_determinant(QMatrix a) {
    require_square(a);
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rational factor = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
        }
    }
    return det;
}

Rational bareiss_determinant(const QMatrix& a) {
    require_square(a);
    const std::size_t n = a.size();
    if (n == 0) return Rational(1);

    // Clear denominators per row; det scales by the product of the row lcms.
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer lcm = 1;
        for (std::size_t j = 0; j < n; ++j) {
            Integer den = a[i][j].get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            Rational scaled = a[i][j] * Rational(lcm);
            m[i][j] = scaled.get_num();  // exact: denominator is 1 now
        }
        scale *= lcm;
    }

    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                // Exact division is the fraction-free invariant.
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Rational det(sign * m[n - 1][n - 1], scale);
    det.canonicalize();
    return det;
}

}  // namespace jetbracket
