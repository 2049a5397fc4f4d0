#pragma once

// Definition-level oracles, deliberately independent of the extraction paths
// they check. The symbol oracle follows the delta recursion
//   (delta_f Op)(p) = f * Op(p) - Op(f * p)
// with linear functions f = x_i: iterating it ord-many times leaves a
// zero-order operator whose coefficient matches the extracted symbol up to the
// exact combinatorial factor (-1)^l * prod_d tau_d!.

#include "generators.hpp"
#include "jetbracket/symbols.hpp"

namespace jtest {

inline CDiffOperator delta_linear(const CDiffOperator& op, int dir) {
    DiffPoly x = DiffPoly::coordinate(JetCoordinate::base(dir));
    CDiffOperator mult_rows = CDiffOperator::multiplication(op.base_dims(), op.rows(), x);
    CDiffOperator mult_cols = CDiffOperator::multiplication(op.base_dims(), op.cols(), x);
    return compose(mult_rows, op) - compose(op, mult_cols);
}

/// Applies delta_{x_{i_1}} o ... o delta_{x_{i_l}} for the direction multiset
/// tau (tau[d] applications in direction d).
inline CDiffOperator delta_iterated(CDiffOperator op, const MultiIndex& tau) {
    for (int d = 0; d < tau.dims(); ++d)
        for (int k = 0; k < tau[d]; ++k) op = delta_linear(op, d);
    return op;
}

/// The combinatorial factor relating the delta recursion to coefficient
/// extraction: (-1)^{|tau|} * prod_d tau_d!.
inline Rational delta_factor(const MultiIndex& tau) {
    Rational f = (tau.order() % 2 == 0) ? 1 : -1;
    for (int d = 0; d < tau.dims(); ++d)
        for (int k = 2; k <= tau[d]; ++k) f *= k;
    return f;
}

inline MultiCDiffOperator delta_slot_linear(const MultiCDiffOperator& a, int slot, int dir) {
    DiffPoly x = DiffPoly::coordinate(JetCoordinate::base(dir));
    CDiffOperator mult = CDiffOperator::multiplication(a.base_dims(), a.fiber_dims(), x);
    return compose_output(mult, a) - compose_slot(a, slot, mult);
}

inline MultiCDiffOperator delta_slot_iterated(MultiCDiffOperator a, int slot, const MultiIndex& tau) {
    for (int d = 0; d < tau.dims(); ++d)
        for (int k = 0; k < tau[d]; ++k) a = delta_slot_linear(a, slot, d);
    return a;
}

}  // namespace jtest
