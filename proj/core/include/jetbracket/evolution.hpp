#pragma once

#include <vector>

#include "jetbracket/multi_cdiff.hpp"

namespace jetbracket {

enum class StructureKind { Vector, Form };

/// Determined evolution system u^j_t = f^j(t, x, u^i_sigma) viewed as
/// J^infty(pi) x R with the flow field D_t = d/dt + E_f. The linearization
/// l_f and its adjoint are computed once at construction.
class EvolutionEquation {
public:
    EvolutionEquation(int n, int m, std::vector<DiffPoly> f);

    int base_dims() const { return n_; }
    int fiber_dims() const { return m_; }
    const std::vector<DiffPoly>& rhs() const { return f_; }

    /// l_f with entry (i,j) = sum_sigma (df^i/du^j_sigma) D_sigma.
    const CDiffOperator& linearization() const { return lf_; }
    const CDiffOperator& adjoint_linearization() const { return lf_star_; }

    /// D_t(p) = dp/dt + E_f(p).
    DiffPoly d_t(const DiffPoly& p) const;
    std::vector<DiffPoly> d_t(const std::vector<DiffPoly>& p) const;
    /// Coefficientwise D_t of an operator (legitimate since [D_t, D_i] = 0).
    CDiffOperator d_t(const CDiffOperator& op) const;
    MultiCDiffOperator d_t(const MultiCDiffOperator& op) const;

private:
    int n_;
    int m_;
    std::vector<DiffPoly> f_;
    CDiffOperator lf_;
    CDiffOperator lf_star_;
};

struct SectionResidual {
    std::vector<DiffPoly> residual;
    bool zero = false;
};

/// Symmetry test: D_t(phi) - l_f(phi) = 0 exactly.
SectionResidual symmetry_residual(const EvolutionEquation& eq, const std::vector<DiffPoly>& phi);
bool is_symmetry(const EvolutionEquation& eq, const std::vector<DiffPoly>& phi);

/// Cosymmetry test: D_t(psi) + l_f^*(psi) = 0 exactly. The overall sign of
/// the reported residual is a convention; the kernel it tests is not.
SectionResidual cosymmetry_residual(const EvolutionEquation& eq, const std::vector<DiffPoly>& psi);
bool is_cosymmetry(const EvolutionEquation& eq, const std::vector<DiffPoly>& psi);

/// Flow-invariance residual of a candidate bivector:
///   R = A_t - l_f o A - A o l_f^*.
/// A is a variational bivector iff R = 0 and A is skew-adjoint; the two
/// conditions are reported separately by callers.
CDiffOperator bivector_residual(const EvolutionEquation& eq, const CDiffOperator& a);

/// Flow-invariance residual of a candidate 2-form:
///   R = B_t + l_f^* o B + B o l_f.
CDiffOperator twoform_residual(const EvolutionEquation& eq, const CDiffOperator& b);

/// General k-ary residual ((k-1)-linear operator):
///   kind = Vector: R = A_t - l_f o A - sum_p A o_p l_f^*
///   kind = Form:   R = A_t + l_f^* o A + sum_p A o_p l_f.
/// Applying R to any tuple equals invariance_defect on that tuple.
MultiCDiffOperator kresidual(const EvolutionEquation& eq, const MultiCDiffOperator& a,
                             StructureKind kind);

/// Direct evaluation of the invariance condition on one argument tuple, with
/// the full t-dependent linearization acting on the arguments:
///   nabla(A(xi_1..)) + sum_i A(.., nabla^*(xi_i), ..),
/// nabla = D_t - l_f for multivectors and -D_t - l_f^* for forms. Used to
/// cross-check kresidual and for the t-shift invariant.
std::vector<DiffPoly> invariance_defect(const EvolutionEquation& eq, const MultiCDiffOperator& a,
                                        StructureKind kind,
                                        const std::vector<std::vector<DiffPoly>>& args);

}  // namespace jetbracket
