#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetbracket/evolution.hpp"
#include "jetbracket/rng.hpp"

namespace jetbracket {

/// Sparse polynomial in covector components theta_1..theta_nvars with exact
/// rational coefficients. Also reused with nvars = (k-1)*n for multilinear
/// symbols (one theta-block per argument, exponents concatenated).
class SymbolPoly {
public:
    SymbolPoly() = default;
    explicit SymbolPoly(int nvars) : nvars_(nvars) {}

    static SymbolPoly constant(int nvars, const Rational& c);
    static SymbolPoly monomial(const MultiIndex& exponents, const Rational& c);

    int nvars() const { return nvars_; }
    const std::map<MultiIndex, Rational, GradedLexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const MultiIndex& e, const Rational& c);

    SymbolPoly operator+(const SymbolPoly& o) const;
    SymbolPoly operator-(const SymbolPoly& o) const;
    SymbolPoly operator-() const;
    SymbolPoly operator*(const SymbolPoly& o) const;
    SymbolPoly operator*(const Rational& c) const;

    bool operator==(const SymbolPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const SymbolPoly& o) const { return !(*this == o); }

    Rational eval(const std::vector<Rational>& theta) const;
    /// True when every term has total degree deg.
    bool is_homogeneous(int deg) const;
    /// P(s * theta): multiplies each term by s^{degree}.
    SymbolPoly scaled_vars(const Rational& s) const;

private:
    int nvars_ = 0;
    std::map<MultiIndex, Rational, GradedLexLess> terms_;
};

/// m x m matrix of theta-polynomials, homogeneous of the stated degree:
/// the principal symbol of an operator at a point.
class SymbolMatrix {
public:
    SymbolMatrix(int n, int m, int degree);

    int theta_dims() const { return n_; }
    int size() const { return m_; }
    int degree() const { return degree_; }

    SymbolPoly& at(int i, int j) { return entries_[i * m_ + j]; }
    const SymbolPoly& at(int i, int j) const { return entries_[i * m_ + j]; }

    /// Exact polynomial determinant (cofactor expansion; m is small here).
    SymbolPoly det() const;
    /// Numeric matrix lambda(v).
    std::vector<std::vector<Rational>> eval(const std::vector<Rational>& v) const;
    SymbolMatrix transposed() const;
    bool operator==(const SymbolMatrix& o) const;

private:
    int n_;
    int m_;
    int degree_;
    std::vector<SymbolPoly> entries_;
};

/// Leading part of a matrix operator at rho, with D_sigma replaced by
/// theta^sigma at top order:
///   lambda^i_j(theta) = sum_{|sigma| = order} a^sigma_{ij}(rho) theta^sigma.
/// Throws on the zero operator (order undefined).
SymbolMatrix principal_symbol(const CDiffOperator& op, const PointAssignment& rho);

/// Max |sigma| whose coefficient survives evaluation at rho; -1 when all
/// coefficients vanish there.
int order_at(const CDiffOperator& op, const PointAssignment& rho);

/// det lambda(theta) not identically zero.
bool is_nondegenerate(const SymbolMatrix& lambda);

/// Multilinear symbol: per-slot leading parts over the concatenated
/// theta-blocks. Key is (out, comps) as in MultiKey with sigmas dropped.
struct MultiSymbol {
    int n = 0;
    int m = 0;
    int arity = 0;
    std::vector<int> slot_degrees;
    /// Indexed by out * m^arity + sum_p comps[p] * m^(arity-1-p).
    std::vector<SymbolPoly> entries;

    SymbolPoly& at(int out, const std::vector<int>& comps);
    const SymbolPoly& at(int out, const std::vector<int>& comps) const;
};

MultiSymbol multi_symbol(const MultiCDiffOperator& a, const PointAssignment& rho);

struct RegularPointResult {
    std::optional<PointAssignment> rho;
    std::optional<SymbolMatrix> lambda;  ///< symbol of l_f at rho when found
    int attempts = 0;
    /// On failure: what dominated the sampling ("order drops at every sampled
    /// point" vs "symbol degenerate at every sampled point").
    std::string diagnostic;
};

/// Samples small-rational jet assignments (numerators in {-3..3}\{0},
/// denominators 1 or 2; the all-zero point first when zero_first is set) and
/// returns the first rho where l_f keeps its global order and det lambda(theta)
/// is not the zero polynomial.
RegularPointResult find_regular_point(const EvolutionEquation& eq, int budget, Rng& rng,
                                      bool zero_first = true);

}  // namespace jetbracket
