#include "jetbracket/multi_cdiff.hpp"

#include <algorithm>

#include "jetbracket/errors.hpp"

namespace jetbracket {

bool MultiKeyLess::operator()(const MultiKey& a, const MultiKey& b) const {
    if (a.out != b.out) return a.out < b.out;
    if (a.comps != b.comps) return a.comps < b.comps;
    if (a.sigmas.size() != b.sigmas.size()) return a.sigmas.size() < b.sigmas.size();
    for (std::size_t p = 0; p < a.sigmas.size(); ++p) {
        int c = cmp_graded_lex(a.sigmas[p], b.sigmas[p]);
        if (c != 0) return c < 0;
    }
    return false;
}

MultiCDiffOperator::MultiCDiffOperator(int n, int m, int arity) : n_(n), m_(m), arity_(arity) {
    if (n < 1 || m < 1 || arity < 1) throw Error("multilinear operator dimensions must be positive");
}

void MultiCDiffOperator::add_term(const MultiKey& key, const DiffPoly& a) {
    if (a.is_zero()) return;
    if (key.out < 0 || key.out >= m_ || static_cast<int>(key.comps.size()) != arity_ ||
        static_cast<int>(key.sigmas.size()) != arity_)
        throw Error("multilinear coefficient key out of shape");
    auto [it, inserted] = coeffs_.emplace(key, a);
    if (!inserted) {
        it->second += a;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

int MultiCDiffOperator::slot_order(int p) const {
    int o = -1;
    for (const auto& [key, a] : coeffs_) o = std::max(o, key.sigmas[p].order());
    return o;
}

std::vector<DiffPoly> MultiCDiffOperator::apply(const std::vector<std::vector<DiffPoly>>& args) const {
    if (static_cast<int>(args.size()) != arity_) throw Error("multilinear apply: arity mismatch");
    for (const auto& arg : args)
        if (static_cast<int>(arg.size()) != m_) throw Error("multilinear apply: component count mismatch");
    std::vector<DiffPoly> out(m_);
    for (const auto& [key, a] : coeffs_) {
        DiffPoly prod = a;
        for (int p = 0; p < arity_ && !prod.is_zero(); ++p)
            prod = prod * total_derivative(args[p][key.comps[p]], key.sigmas[p]);
        out[key.out] += prod;
    }
    return out;
}

MultiCDiffOperator MultiCDiffOperator::operator+(const MultiCDiffOperator& o) const {
    if (n_ != o.n_ || m_ != o.m_ || arity_ != o.arity_) throw Error("multilinear sum: shape mismatch");
    MultiCDiffOperator r = *this;
    for (const auto& [key, a] : o.coeffs_) r.add_term(key, a);
    return r;
}

MultiCDiffOperator MultiCDiffOperator::operator-(const MultiCDiffOperator& o) const {
    return *this + (-o);
}

MultiCDiffOperator MultiCDiffOperator::operator-() const {
    MultiCDiffOperator r(n_, m_, arity_);
    for (const auto& [key, a] : coeffs_) r.coeffs_.emplace(key, -a);
    return r;
}

MultiCDiffOperator map_coefficients(const MultiCDiffOperator& op,
                                    const std::function<DiffPoly(const DiffPoly&)>& fn) {
    MultiCDiffOperator r(op.base_dims(), op.fiber_dims(), op.arity());
    for (const auto& [key, a] : op.coefficients()) r.add_term(key, fn(a));
    return r;
}

MultiCDiffOperator compose_output(const CDiffOperator& delta, const MultiCDiffOperator& a) {
    if (delta.cols() != a.fiber_dims() || !delta.is_square())
        throw Error("compose_output: operator must be square of matching size");
    if (delta.base_dims() != a.base_dims()) throw Error("compose_output: base dimension mismatch");
    const int arity = a.arity();
    MultiCDiffOperator r(a.base_dims(), a.fiber_dims(), arity);
    for (int i = 0; i < delta.rows(); ++i) {
        for (int jrow = 0; jrow < delta.cols(); ++jrow) {
            for (const auto& [tau, b] : delta.at(i, jrow).summands()) {
                for (const auto& [key, coeff] : a.coefficients()) {
                    if (key.out != jrow) continue;
                    // b D_tau (coeff * prod_p D_{sigma_p} xi_p): distribute tau
                    // over the coefficient and the arity slots.
                    for_each_composition(tau, arity + 1,
                                         [&](const std::vector<MultiIndex>& parts, const Integer& mult) {
                                             MultiKey nk = key;
                                             nk.out = i;
                                             for (int p = 0; p < arity; ++p)
                                                 nk.sigmas[p] = key.sigmas[p] + parts[p + 1];
                                             DiffPoly c = b * total_derivative(coeff, parts[0]) * Rational(mult);
                                             r.add_term(nk, c);
                                         });
                }
            }
        }
    }
    return r;
}

MultiCDiffOperator compose_slot(const MultiCDiffOperator& a, int p, const CDiffOperator& nabla) {
    if (p < 0 || p >= a.arity()) throw Error("compose_slot: slot index out of range");
    if (nabla.cols() != a.fiber_dims() || !nabla.is_square())
        throw Error("compose_slot: operator must be square of matching size");
    if (nabla.base_dims() != a.base_dims()) throw Error("compose_slot: base dimension mismatch");
    MultiCDiffOperator r(a.base_dims(), a.fiber_dims(), a.arity());
    for (const auto& [key, coeff] : a.coefficients()) {
        const int c = key.comps[p];
        const MultiIndex& sigma = key.sigmas[p];
        for (int j = 0; j < nabla.cols(); ++j) {
            for (const auto& [tau, b] : nabla.at(c, j).summands()) {
                // coeff * D_sigma(b D_tau xi^j) via the Leibniz rule in slot p.
                for (const MultiIndex& mu : subindices(sigma)) {
                    MultiKey nk = key;
                    nk.comps[p] = j;
                    nk.sigmas[p] = (sigma - mu) + tau;
                    r.add_term(nk, coeff * total_derivative(b, mu) * Rational(choose(sigma, mu)));
                }
            }
        }
    }
    return r;
}

MultiCDiffOperator from_cdiff(const CDiffOperator& op) {
    if (!op.is_square()) throw Error("from_cdiff: operator must be square");
    MultiCDiffOperator r(op.base_dims(), op.rows(), 1);
    for (int i = 0; i < op.rows(); ++i)
        for (int j = 0; j < op.cols(); ++j)
            for (const auto& [sigma, a] : op.at(i, j).summands())
                r.add_term(MultiKey{i, {j}, {sigma}}, a);
    return r;
}

CDiffOperator to_cdiff(const MultiCDiffOperator& op) {
    if (op.arity() != 1) throw Error("to_cdiff: arity must be 1");
    CDiffOperator r(op.base_dims(), op.fiber_dims(), op.fiber_dims());
    for (const auto& [key, a] : op.coefficients()) r.at(key.out, key.comps[0]).add_term(key.sigmas[0], a);
    return r;
}

}  // namespace jetbracket
