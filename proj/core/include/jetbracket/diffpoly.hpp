#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "jetbracket/jet_coordinate.hpp"

namespace jetbracket {

/// Finite multiset of coordinates, kept sorted by the coordinate order with
/// positive exponents. The empty monomial is 1.
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }
    static Monomial coordinate(const JetCoordinate& c, int exponent = 1);

    const std::vector<std::pair<JetCoordinate, int>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    /// Total degree (sum of exponents).
    int degree() const;
    int exponent_of(const JetCoordinate& c) const;

    Monomial times(const Monomial& o) const;
    /// Copy with the exponent of c replaced by e (erased when e == 0).
    Monomial with_exponent(const JetCoordinate& c, int e) const;

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    bool operator<(const Monomial& o) const;

private:
    std::vector<std::pair<JetCoordinate, int>> factors_;
};

/// Point of E^infty: values for finitely many coordinates; everything not
/// assigned evaluates to 0.
using PointAssignment = std::map<JetCoordinate, Rational>;

/// Element of the ring of differential polynomials: an exact multivariate
/// polynomial in t, x_i and the jet coordinates u^j_sigma with rational
/// coefficients. Canonical form: no zero coefficients are stored, so equality
/// is structural comparison.
class DiffPoly {
public:
    DiffPoly() = default;

    static DiffPoly zero() { return DiffPoly(); }
    static DiffPoly constant(const Rational& c);
    static DiffPoly coordinate(const JetCoordinate& c);
    static DiffPoly term(const Monomial& m, const Rational& c);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (0 if absent).
    Rational constant_term() const;

    /// Accumulates c * m, dropping the term if the sum cancels.
    void add_term(const Monomial& m, const Rational& c);

    DiffPoly operator+(const DiffPoly& o) const;
    DiffPoly operator-(const DiffPoly& o) const;
    DiffPoly operator-() const;
    DiffPoly operator*(const DiffPoly& o) const;
    DiffPoly operator*(const Rational& c) const;
    DiffPoly pow(int e) const;

    DiffPoly& operator+=(const DiffPoly& o);
    DiffPoly& operator-=(const DiffPoly& o);

    bool operator==(const DiffPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const DiffPoly& o) const { return !(*this == o); }

    /// Max |sigma| over all jet coordinates present; -1 when no jets occur.
    int max_jet_order() const;
    /// Distinct coordinates occurring in the support.
    std::set<JetCoordinate> support_coordinates() const;

private:
    std::map<Monomial, Rational> terms_;
};

inline DiffPoly operator*(const Rational& c, const DiffPoly& p) { return p * c; }

/// Formal partial derivative with respect to the single coordinate v.
DiffPoly partial(const DiffPoly& p, const JetCoordinate& v);

/// Total derivative D_i (0-based direction):
/// D_i(p) = dp/dx_i + sum_{j,sigma} u^j_{sigma+e_i} dp/du^j_sigma.
DiffPoly total_derivative(const DiffPoly& p, int dir);

/// Iterated total derivative D_sigma.
DiffPoly total_derivative(const DiffPoly& p, const MultiIndex& sigma);

/// Evolutionary derivation: (E_phi)(p) = sum_{j,sigma} D_sigma(phi^j) dp/du^j_sigma.
DiffPoly evolutionary_apply(const std::vector<DiffPoly>& phi, const DiffPoly& p);

/// Exact evaluation at rho; unassigned coordinates default to 0 and are
/// reported through `unassigned` when a channel is supplied.
Rational eval_at(const DiffPoly& p, const PointAssignment& rho,
                 std::vector<JetCoordinate>* unassigned = nullptr);

}  // namespace jetbracket
