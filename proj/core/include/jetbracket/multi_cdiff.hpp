#pragma once

#include <map>
#include <vector>

#include "jetbracket/cdiff.hpp"

namespace jetbracket {

/// Coefficient key of a multilinear operator: output component, one dependent
/// index per slot and one multi-index per slot, kept in slot order (no
/// symmetrization is applied).
struct MultiKey {
    int out = 0;
    std::vector<int> comps;
    std::vector<MultiIndex> sigmas;

    bool operator==(const MultiKey& o) const {
        return out == o.out && comps == o.comps && sigmas == o.sigmas;
    }
};

struct MultiKeyLess {
    bool operator()(const MultiKey& a, const MultiKey& b) const;
};

/// (k-1)-linear C-differential operator with DiffPoly coefficients:
///   (A(xi_1..xi_{k-1}))^i =
///       sum a^i_{c_1..c_{k-1}}(sigma_1..sigma_{k-1}) prod_p D_{sigma_p}(xi_p^{c_p}).
/// Arity 1 coincides with an m x m CDiffOperator (see the conversions below).
class MultiCDiffOperator {
public:
    MultiCDiffOperator(int n, int m, int arity);

    int base_dims() const { return n_; }
    int fiber_dims() const { return m_; }
    int arity() const { return arity_; }

    const std::map<MultiKey, DiffPoly, MultiKeyLess>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(const MultiKey& key, const DiffPoly& a);

    /// Max |sigma_p| over the support for slot p; -1 when the operator is zero.
    int slot_order(int p) const;

    std::vector<DiffPoly> apply(const std::vector<std::vector<DiffPoly>>& args) const;

    MultiCDiffOperator operator+(const MultiCDiffOperator& o) const;
    MultiCDiffOperator operator-(const MultiCDiffOperator& o) const;
    MultiCDiffOperator operator-() const;

    bool operator==(const MultiCDiffOperator& o) const {
        return n_ == o.n_ && m_ == o.m_ && arity_ == o.arity_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const MultiCDiffOperator& o) const { return !(*this == o); }

private:
    int n_;
    int m_;
    int arity_;
    std::map<MultiKey, DiffPoly, MultiKeyLess> coeffs_;
};

MultiCDiffOperator map_coefficients(const MultiCDiffOperator& op,
                                    const std::function<DiffPoly(const DiffPoly&)>& fn);

/// delta o A: the m x m operator delta composed on the output, reduced to
/// multilinear normal form via the generalized Leibniz rule.
MultiCDiffOperator compose_output(const CDiffOperator& delta, const MultiCDiffOperator& a);

/// A with the m x m operator nabla composed into slot p:
/// (A o_p nabla)(.., xi_p, ..) = A(.., nabla(xi_p), ..).
MultiCDiffOperator compose_slot(const MultiCDiffOperator& a, int p, const CDiffOperator& nabla);

/// Arity-1 conversions.
MultiCDiffOperator from_cdiff(const CDiffOperator& op);
CDiffOperator to_cdiff(const MultiCDiffOperator& op);

}  // namespace jetbracket
