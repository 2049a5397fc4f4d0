#include <doctest.h>

#include "jetbracket/printer.hpp"
#include "support/generators.hpp"

using namespace jtest;

namespace {

// Independent expansion of <q, Op p> - <Op* q, p> for the Green identity.
DiffPoly pairing_defect(const CDiffOperator& op, const std::vector<DiffPoly>& p,
                        const std::vector<DiffPoly>& q) {
    std::vector<DiffPoly> op_p = op.apply(p);
    std::vector<DiffPoly> adj_q = adjoint(op).apply(q);
    DiffPoly defect;
    for (std::size_t i = 0; i < q.size(); ++i) defect += q[i] * op_p[i];
    for (std::size_t j = 0; j < p.size(); ++j) defect -= adj_q[j] * p[j];
    return defect;
}

}  // namespace

TEST_SUITE("cdiff") {

TEST_CASE("application") {
    CHECK(Op("D_x").apply({P("u")}) == std::vector<DiffPoly>{P("u_x")});
    CHECK(Op("0").apply({P("u*u_x")}) == std::vector<DiffPoly>{DiffPoly::zero()});

    EvolutionEquation eq = kdv();
    std::vector<DiffPoly> lhs = eq.linearization().apply({P("u_x")});
    CHECK(lhs == std::vector<DiffPoly>{P("6*u_x^2 + 6*u*u_xx + u_xxxx")});
    CHECK(lhs == std::vector<DiffPoly>{evolutionary_apply(eq.rhs(), P("u_x"))});
}

TEST_CASE("application rejects wrong arity") {
    CHECK_THROWS_AS(Op("D_x").apply({P("u"), P("u")}), Error);
}

TEST_CASE("composition normal forms") {
    CHECK(compose(Op("D_x"), Op("u")) == Op("u*D_x + u_x"));
    CHECK(compose(Op("D_xxx"), Op("u")) == Op("u*D_xxx + 3*u_x*D_xx + 3*u_xx*D_x + u_xxx"));
    CHECK(compose(Op("D_x"), Op("D_x")) == Op("D_xx"));
}

TEST_CASE("adjoint coordinate formula") {
    CHECK(adjoint(Op("u*D_x")) == Op("-u*D_x - u_x"));
    CHECK(adjoint(Op("D_xx")) == Op("D_xx"));
    CHECK(adjoint(kdv().linearization()) == Op("-6*u*D_x - D_xxx"));
}

TEST_CASE("green current fixed representatives") {
    // D_x: q p_x - (-q_x) p = D_x(q p), so J = q*p.
    std::vector<DiffPoly> j1 = greens_current(Op("D_x"), {P("u")}, {P("u_xx")});
    CHECK(j1 == std::vector<DiffPoly>{P("u*u_xx")});

    // Zero-order operators pair with themselves: J = 0.
    std::vector<DiffPoly> j0 = greens_current(Op("u^2 + t"), {P("u_x")}, {P("u")});
    CHECK(j0 == std::vector<DiffPoly>{DiffPoly::zero()});
}

TEST_CASE("property: green divergence identity") {
    Gen gen(41);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + i % 2;
        int size = 1 + i % 2;
        CDiffOperator op = gen.op(n, size, size, 3);
        std::vector<DiffPoly> p = gen.section(n, size);
        std::vector<DiffPoly> q = gen.section(n, size);
        std::vector<DiffPoly> current = greens_current(op, p, q);
        DiffPoly divergence;
        for (int d = 0; d < n; ++d) divergence += total_derivative(current[d], d);
        CHECK(pairing_defect(op, p, q) == divergence);
    }
}

TEST_CASE("skew and self adjointness") {
    CHECK(is_skew_adjoint(Op("D_x")));
    CHECK_FALSE(is_skew_adjoint(Op("D_xx")));
    CHECK(is_self_adjoint(Op("D_xx")));
    CHECK(is_skew_adjoint(Op("D_xxx + 4*u*D_x + 2*u_x")));
    CHECK(is_skew_adjoint(CDiffOperator::zero(1, 1, 1)));
    CHECK_THROWS_AS(is_skew_adjoint(CDiffOperator::zero(1, 1, 2)), Error);
}

TEST_CASE("property: adjoint is an involution") {
    Gen gen(43);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + i % 2;
        CDiffOperator op = gen.op(n, 1 + i % 3, 1 + (i / 2) % 3, 3);
        CHECK(adjoint(adjoint(op)) == op);
    }
}

TEST_CASE("property: adjoint reverses composition") {
    Gen gen(47);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + i % 2;
        int a = 1 + i % 2, b = 1 + (i / 2) % 2, c = 1 + (i / 4) % 2;
        CDiffOperator left = gen.op(n, a, b, 2);
        CDiffOperator right = gen.op(n, b, c, 2);
        CHECK(adjoint(compose(left, right)) == compose(adjoint(right), adjoint(left)));
    }
}

TEST_CASE("property: apply and compose cohere") {
    Gen gen(53);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + i % 2;
        int a = 1 + i % 2, b = 1 + (i / 2) % 2, c = 1 + (i / 4) % 2;
        CDiffOperator left = gen.op(n, a, b, 2);
        CDiffOperator right = gen.op(n, b, c, 2);
        std::vector<DiffPoly> xi = gen.section(n, c);
        CHECK(compose(left, right).apply(xi) == left.apply(right.apply(xi)));
    }
}

TEST_CASE("property: normal form equality is decidable structurally") {
    Gen gen(59);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + i % 2;
        CDiffOperator a = gen.op(n, 2, 2, 2);
        CDiffOperator b = gen.op(n, 2, 2, 2);
        CDiffOperator c = gen.op(n, 2, 2, 2);
        // Distributivity and associativity land on identical summand maps.
        CHECK(compose(a + b, c) == compose(a, c) + compose(b, c));
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("matrix operators over two base variables") {
    CDiffOperator op = Op("[D_x1x2, u2*D_x1; 0, u1_x2]", 2, 2);
    CHECK(op.order() == 2);
    CHECK(op.at(0, 0).order() == 2);
    CHECK(adjoint(adjoint(op)) == op);
    std::vector<DiffPoly> out = op.apply({P("u1", 2, 2), P("u2", 2, 2)});
    CHECK(out[0] == P("u1_x1x2 + u2*u2_x1", 2, 2));
    CHECK(out[1] == P("u1_x2*u2", 2, 2));
}

}  // TEST_SUITE
