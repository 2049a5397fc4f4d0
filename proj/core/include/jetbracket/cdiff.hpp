#pragma once

#include <functional>
#include <map>
#include <vector>

#include "jetbracket/diffpoly.hpp"

namespace jetbracket {

/// One matrix entry of a C-differential operator: a finite sum
///   sum_sigma a_sigma D_sigma
/// with coefficients on the left and derivatives on the right. That is the
/// normal form every algebraic operation reduces to, so operator equality is
/// structural comparison of the summand maps.
class CDiffEntry {
public:
    CDiffEntry() = default;

    static CDiffEntry term(const MultiIndex& sigma, const DiffPoly& a);

    const std::map<MultiIndex, DiffPoly, GradedLexLess>& summands() const { return summands_; }
    bool is_zero() const { return summands_.empty(); }
    /// Max |sigma| with nonzero coefficient; -1 for the zero entry.
    int order() const;

    void add_term(const MultiIndex& sigma, const DiffPoly& a);

    CDiffEntry operator+(const CDiffEntry& o) const;
    CDiffEntry operator-(const CDiffEntry& o) const;
    CDiffEntry operator-() const;
    /// a * (this), coefficientwise.
    CDiffEntry left_multiplied(const DiffPoly& a) const;

    DiffPoly apply(const DiffPoly& xi) const;

    bool operator==(const CDiffEntry& o) const { return summands_ == o.summands_; }
    bool operator!=(const CDiffEntry& o) const { return !(*this == o); }

private:
    std::map<MultiIndex, DiffPoly, GradedLexLess> summands_;
};

/// Leibniz normal form of (a D_sigma) o (b D_tau):
///   sum_{mu <= sigma} choose(sigma, mu) * a D_mu(b) * D_{sigma - mu + tau}.
CDiffEntry compose(const CDiffEntry& left, const CDiffEntry& right);

/// Matrix of CDiffEntry values: the home of l_f, candidate bivectors and
/// 2-forms. Carries the base dimension n so derivative bookkeeping and
/// printing do not need extra context.
class CDiffOperator {
public:
    CDiffOperator(int n, int rows, int cols);

    static CDiffOperator zero(int n, int rows, int cols) { return CDiffOperator(n, rows, cols); }
    static CDiffOperator identity(int n, int m);
    /// Diagonal m x m operator a * Id (zero-order).
    static CDiffOperator multiplication(int n, int m, const DiffPoly& a);
    /// Diagonal m x m operator D_sigma * Id.
    static CDiffOperator total_derivative_op(int n, int m, const MultiIndex& sigma);

    int base_dims() const { return n_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    CDiffEntry& at(int i, int j) { return entries_[i * cols_ + j]; }
    const CDiffEntry& at(int i, int j) const { return entries_[i * cols_ + j]; }

    bool is_zero() const;
    /// Max entry order; -1 for the zero operator.
    int order() const;

    std::vector<DiffPoly> apply(const std::vector<DiffPoly>& xi) const;

    CDiffOperator operator+(const CDiffOperator& o) const;
    CDiffOperator operator-(const CDiffOperator& o) const;
    CDiffOperator operator-() const;

    bool operator==(const CDiffOperator& o) const;
    bool operator!=(const CDiffOperator& o) const { return !(*this == o); }

private:
    int n_;
    int rows_;
    int cols_;
    std::vector<CDiffEntry> entries_;
};

/// Normal form of left o right; apply(compose(L, R), xi) == apply(L, apply(R, xi)).
CDiffOperator compose(const CDiffOperator& left, const CDiffOperator& right);

/// Formal adjoint: entry (i,j) of the result is
/// sum_sigma (-1)^{|sigma|} D_sigma o a^sigma_{ji}, expanded to normal form.
CDiffOperator adjoint(const CDiffOperator& op);

/// Green current J = (J_1..J_n) with
///   <q, op(p)> - <adjoint(op)(q), p> = sum_i D_i(J_i)
/// exactly, built by peeling one derivative at a time in graded-lex direction
/// order. Only the divergence identity is contractual; the representative is
/// fixed to make golden tests possible.
std::vector<DiffPoly> greens_current(const CDiffOperator& op, const std::vector<DiffPoly>& p,
                                     const std::vector<DiffPoly>& q);

bool is_skew_adjoint(const CDiffOperator& op);
bool is_self_adjoint(const CDiffOperator& op);

CDiffOperator map_coefficients(const CDiffOperator& op,
                               const std::function<DiffPoly(const DiffPoly&)>& fn);

}  // namespace jetbracket
