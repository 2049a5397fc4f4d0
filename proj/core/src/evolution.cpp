#include "jetbracket/evolution.hpp"

#include <algorithm>

#include "jetbracket/errors.hpp"

namespace jetbracket {

namespace {

CDiffOperator linearize(int n, int m, const std::vector<DiffPoly>& f) {
    CDiffOperator lf(n, m, m);
    for (int i = 0; i < m; ++i) {
        for (const JetCoordinate& coord : f[i].support_coordinates()) {
            if (!coord.is_jet()) continue;
            lf.at(i, coord.index()).add_term(coord.sigma(), partial(f[i], coord));
        }
    }
    return lf;
}

}  // namespace

EvolutionEquation::EvolutionEquation(int n, int m, std::vector<DiffPoly> f)
    : n_(n), m_(m), f_(std::move(f)), lf_(n, m, m), lf_star_(n, m, m) {
    if (n_ < 1 || m_ < 1) throw Error("evolution equation needs n >= 1, m >= 1");
    if (static_cast<int>(f_.size()) != m_)
        throw Error("evolution equation: expected " + std::to_string(m_) + " right-hand sides");
    for (const DiffPoly& comp : f_) {
        for (const JetCoordinate& coord : comp.support_coordinates()) {
            if (coord.is_jet() && (coord.index() < 0 || coord.index() >= m_))
                throw Error("right-hand side references an undeclared dependent variable");
            if (coord.is_jet() && coord.sigma().dims() != n_)
                throw Error("right-hand side jet has wrong base dimension");
            if (coord.is_base() && coord.index() >= n_)
                throw Error("right-hand side references an undeclared base variable");
        }
    }
    lf_ = linearize(n_, m_, f_);
    lf_star_ = adjoint(lf_);
}

DiffPoly EvolutionEquation::d_t(const DiffPoly& p) const {
    return partial(p, JetCoordinate::time()) + evolutionary_apply(f_, p);
}

std::vector<DiffPoly> EvolutionEquation::d_t(const std::vector<DiffPoly>& p) const {
    std::vector<DiffPoly> r;
    r.reserve(p.size());
    for (const DiffPoly& comp : p) r.push_back(d_t(comp));
    return r;
}

CDiffOperator EvolutionEquation::d_t(const CDiffOperator& op) const {
    return map_coefficients(op, [this](const DiffPoly& a) { return d_t(a); });
}

MultiCDiffOperator EvolutionEquation::d_t(const MultiCDiffOperator& op) const {
    return map_coefficients(op, [this](const DiffPoly& a) { return d_t(a); });
}

SectionResidual symmetry_residual(const EvolutionEquation& eq, const std::vector<DiffPoly>& phi) {
    std::vector<DiffPoly> lhs = eq.d_t(phi);
    std::vector<DiffPoly> rhs = eq.linearization().apply(phi);
    SectionResidual r;
    r.zero = true;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        r.residual.push_back(lhs[i] - rhs[i]);
        r.zero = r.zero && r.residual.back().is_zero();
    }
    return r;
}

bool is_symmetry(const EvolutionEquation& eq, const std::vector<DiffPoly>& phi) {
    return symmetry_residual(eq, phi).zero;
}

SectionResidual cosymmetry_residual(const EvolutionEquation& eq, const std::vector<DiffPoly>& psi) {
    std::vector<DiffPoly> dt = eq.d_t(psi);
    std::vector<DiffPoly> ad = eq.adjoint_linearization().apply(psi);
    SectionResidual r;
    r.zero = true;
    for (std::size_t i = 0; i < dt.size(); ++i) {
        r.residual.push_back(dt[i] + ad[i]);
        r.zero = r.zero && r.residual.back().is_zero();
    }
    return r;
}

bool is_cosymmetry(const EvolutionEquation& eq, const std::vector<DiffPoly>& psi) {
    return cosymmetry_residual(eq, psi).zero;
}

namespace {

void require_square(const EvolutionEquation& eq, const CDiffOperator& a, const char* what) {
    if (!a.is_square() || a.rows() != eq.fiber_dims() || a.base_dims() != eq.base_dims())
        throw Error(std::string(what) + ": operator must be m x m over the equation's base");
}

}  // namespace

CDiffOperator bivector_residual(const EvolutionEquation& eq, const CDiffOperator& a) {
    require_square(eq, a, "bivector_residual");
    return eq.d_t(a) - compose(eq.linearization(), a) - compose(a, eq.adjoint_linearization());
}

CDiffOperator twoform_residual(const EvolutionEquation& eq, const CDiffOperator& b) {
    require_square(eq, b, "twoform_residual");
    return eq.d_t(b) + compose(eq.adjoint_linearization(), b) + compose(b, eq.linearization());
}

MultiCDiffOperator kresidual(const EvolutionEquation& eq, const MultiCDiffOperator& a,
                             StructureKind kind) {
    if (a.fiber_dims() != eq.fiber_dims() || a.base_dims() != eq.base_dims())
        throw Error("kresidual: operator shape does not match the equation");
    const CDiffOperator& lf = eq.linearization();
    const CDiffOperator& lf_star = eq.adjoint_linearization();
    MultiCDiffOperator r = eq.d_t(a);
    if (kind == StructureKind::Vector) {
        r = r - compose_output(lf, a);
        for (int p = 0; p < a.arity(); ++p) r = r - compose_slot(a, p, lf_star);
    } else {
        r = r + compose_output(lf_star, a);
        for (int p = 0; p < a.arity(); ++p) r = r + compose_slot(a, p, lf);
    }
    return r;
}

std::vector<DiffPoly> invariance_defect(const EvolutionEquation& eq, const MultiCDiffOperator& a,
                                        StructureKind kind,
                                        const std::vector<std::vector<DiffPoly>>& args) {
    if (static_cast<int>(args.size()) != a.arity()) throw Error("invariance_defect: arity mismatch");
    auto nabla = [&](const std::vector<DiffPoly>& w) {
        std::vector<DiffPoly> dt = eq.d_t(w);
        if (kind == StructureKind::Vector) {
            std::vector<DiffPoly> lw = eq.linearization().apply(w);
            for (std::size_t i = 0; i < dt.size(); ++i) dt[i] -= lw[i];
            return dt;
        }
        std::vector<DiffPoly> lw = eq.adjoint_linearization().apply(w);
        for (std::size_t i = 0; i < dt.size(); ++i) dt[i] = -dt[i] - lw[i];
        return dt;
    };
    auto nabla_star = [&](const std::vector<DiffPoly>& w) {
        // (D_t - l_f)^* = -D_t - l_f^*  and  (-D_t - l_f^*)^* = D_t - l_f.
        std::vector<DiffPoly> dt = eq.d_t(w);
        if (kind == StructureKind::Vector) {
            std::vector<DiffPoly> lw = eq.adjoint_linearization().apply(w);
            for (std::size_t i = 0; i < dt.size(); ++i) dt[i] = -dt[i] - lw[i];
            return dt;
        }
        std::vector<DiffPoly> lw = eq.linearization().apply(w);
        for (std::size_t i = 0; i < dt.size(); ++i) dt[i] -= lw[i];
        return dt;
    };

    std::vector<DiffPoly> out = nabla(a.apply(args));
    for (int i = 0; i < a.arity(); ++i) {
        std::vector<std::vector<DiffPoly>> modified = args;
        modified[i] = nabla_star(args[i]);
        std::vector<DiffPoly> slot = a.apply(modified);
        for (std::size_t c = 0; c < out.size(); ++c) out[c] += slot[c];
    }
    // For forms the equation was multiplied by -1 so that the defect agrees
    // with kresidual's sign convention; both vanish together either way.
    if (kind == StructureKind::Form)
        for (DiffPoly& c : out) c = -c;
    return out;
}

}  // namespace jetbracket
