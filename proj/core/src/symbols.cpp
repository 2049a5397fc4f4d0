#include "jetbracket/symbols.hpp"

#include <algorithm>

#include "jetbracket/errors.hpp"

namespace jetbracket {

// ---------------------------------------------------------------------------
// SymbolPoly

SymbolPoly SymbolPoly::constant(int nvars, const Rational& c) {
    SymbolPoly p(nvars);
    p.add_term(MultiIndex(nvars), c);
    return p;
}

SymbolPoly SymbolPoly::monomial(const MultiIndex& exponents, const Rational& c) {
    SymbolPoly p(exponents.dims());
    p.add_term(exponents, c);
    return p;
}

void SymbolPoly::add_term(const MultiIndex& e, const Rational& c) {
    if (c == 0) return;
    if (e.dims() != nvars_) throw Error("symbol term has wrong variable count");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymbolPoly SymbolPoly::operator+(const SymbolPoly& o) const {
    SymbolPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SymbolPoly SymbolPoly::operator-(const SymbolPoly& o) const { return *this + (-o); }

SymbolPoly SymbolPoly::operator-() const {
    SymbolPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SymbolPoly SymbolPoly::operator*(const SymbolPoly& o) const {
    SymbolPoly r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

SymbolPoly SymbolPoly::operator*(const Rational& c) const {
    SymbolPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

Rational SymbolPoly::eval(const std::vector<Rational>& theta) const {
    if (static_cast<int>(theta.size()) != nvars_) throw Error("symbol evaluation: wrong covector size");
    Rational v = 0;
    for (const auto& [e, c] : terms_) {
        Rational prod = c;
        for (int d = 0; d < nvars_ && prod != 0; ++d)
            if (e[d] > 0) prod *= pow_rational(theta[d], static_cast<unsigned>(e[d]));
        v += prod;
    }
    return v;
}

bool SymbolPoly::is_homogeneous(int deg) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [deg](const auto& t) { return t.first.order() == deg; });
}

SymbolPoly SymbolPoly::scaled_vars(const Rational& s) const {
    SymbolPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        r.add_term(e, c * pow_rational(s, static_cast<unsigned>(e.order())));
    return r;
}

// ---------------------------------------------------------------------------
// SymbolMatrix

SymbolMatrix::SymbolMatrix(int n, int m, int degree) : n_(n), m_(m), degree_(degree) {
    if (n < 1 || m < 1) throw Error("symbol matrix dimensions must be positive");
    entries_.assign(static_cast<std::size_t>(m) * m, SymbolPoly(n));
}

namespace {

SymbolPoly det_rec(const SymbolMatrix& a, std::vector<int>& rows, std::vector<int>& cols) {
    const int k = static_cast<int>(rows.size());
    if (k == 1) return a.at(rows[0], cols[0]);
    SymbolPoly acc(a.theta_dims());
    const int top = rows[0];
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (int c = 0; c < k; ++c) {
        const SymbolPoly& pivot = a.at(top, cols[c]);
        if (pivot.is_zero()) continue;
        std::vector<int> sub_cols;
        sub_cols.reserve(k - 1);
        for (int d = 0; d < k; ++d)
            if (d != c) sub_cols.push_back(cols[d]);
        SymbolPoly minor = det_rec(a, sub_rows, sub_cols);
        SymbolPoly term = pivot * minor;
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

SymbolPoly SymbolMatrix::det() const {
    std::vector<int> rows(m_), cols(m_);
    for (int i = 0; i < m_; ++i) rows[i] = cols[i] = i;
    return det_rec(*this, rows, cols);
}

std::vector<std::vector<Rational>> SymbolMatrix::eval(const std::vector<Rational>& v) const {
    std::vector<std::vector<Rational>> out(m_, std::vector<Rational>(m_));
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) out[i][j] = at(i, j).eval(v);
    return out;
}

SymbolMatrix SymbolMatrix::transposed() const {
    SymbolMatrix r(n_, m_, degree_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) r.at(i, j) = at(j, i);
    return r;
}

bool SymbolMatrix::operator==(const SymbolMatrix& o) const {
    return n_ == o.n_ && m_ == o.m_ && degree_ == o.degree_ && entries_ == o.entries_;
}

// ---------------------------------------------------------------------------
// Symbol extraction

SymbolMatrix principal_symbol(const CDiffOperator& op, const PointAssignment& rho) {
    if (!op.is_square()) throw Error("principal_symbol: operator must be square");
    const int l = op.order();
    if (l < 0) throw Error("principal_symbol: zero operator has no defined order");
    SymbolMatrix lambda(op.base_dims(), op.rows(), l);
    for (int i = 0; i < op.rows(); ++i)
        for (int j = 0; j < op.cols(); ++j)
            for (const auto& [sigma, a] : op.at(i, j).summands())
                if (sigma.order() == l) lambda.at(i, j).add_term(sigma, eval_at(a, rho));
    return lambda;
}

int order_at(const CDiffOperator& op, const PointAssignment& rho) {
    int o = -1;
    for (int i = 0; i < op.rows(); ++i)
        for (int j = 0; j < op.cols(); ++j)
            for (const auto& [sigma, a] : op.at(i, j).summands())
                if (sigma.order() > o && eval_at(a, rho) != 0) o = sigma.order();
    return o;
}

bool is_nondegenerate(const SymbolMatrix& lambda) { return !lambda.det().is_zero(); }

SymbolPoly& MultiSymbol::at(int out, const std::vector<int>& comps) {
    std::size_t idx = out;
    for (int c : comps) idx = idx * m + c;
    return entries[idx];
}

const SymbolPoly& MultiSymbol::at(int out, const std::vector<int>& comps) const {
    std::size_t idx = out;
    for (int c : comps) idx = idx * m + c;
    return entries[idx];
}

MultiSymbol multi_symbol(const MultiCDiffOperator& a, const PointAssignment& rho) {
    if (a.is_zero()) throw Error("multi_symbol: zero operator has no defined order");
    MultiSymbol s;
    s.n = a.base_dims();
    s.m = a.fiber_dims();
    s.arity = a.arity();
    for (int p = 0; p < s.arity; ++p) s.slot_degrees.push_back(a.slot_order(p));
    std::size_t count = s.m;
    for (int p = 0; p < s.arity; ++p) count *= s.m;
    s.entries.assign(count, SymbolPoly(s.arity * s.n));
    for (const auto& [key, coeff] : a.coefficients()) {
        bool leading = true;
        for (int p = 0; p < s.arity; ++p)
            if (key.sigmas[p].order() != s.slot_degrees[p]) leading = false;
        if (!leading) continue;
        Rational c = eval_at(coeff, rho);
        if (c == 0) continue;
        // Concatenate the per-slot exponents into one theta-block vector.
        MultiIndex e(s.arity * s.n);
        for (int p = 0; p < s.arity; ++p)
            for (int d = 0; d < s.n; ++d) e[p * s.n + d] = key.sigmas[p][d];
        s.at(key.out, key.comps).add_term(e, c);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Regular points

RegularPointResult find_regular_point(const EvolutionEquation& eq, int budget, Rng& rng,
                                      bool zero_first) {
    const CDiffOperator& lf = eq.linearization();
    const int global_order = lf.order();
    RegularPointResult result;

    std::vector<JetCoordinate> coords;
    for (int i = 0; i < lf.rows(); ++i)
        for (int j = 0; j < lf.cols(); ++j)
            for (const auto& [sigma, a] : lf.at(i, j).summands())
                for (const JetCoordinate& c : a.support_coordinates()) coords.push_back(c);
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

    int order_drops = 0;
    int degenerate = 0;
    for (int attempt = 0; attempt < budget; ++attempt) {
        PointAssignment rho;
        if (!(zero_first && attempt == 0))
            for (const JetCoordinate& c : coords) rho[c] = rng.small_rational();
        ++result.attempts;
        if (order_at(lf, rho) != global_order) {
            ++order_drops;
            continue;
        }
        SymbolMatrix lambda = principal_symbol(lf, rho);
        if (!is_nondegenerate(lambda)) {
            ++degenerate;
            continue;
        }
        result.rho = std::move(rho);
        result.lambda = std::move(lambda);
        return result;
    }
    result.diagnostic = degenerate >= order_drops
                            ? "symbol degenerate at every sampled point"
                            : "operator order drops at every sampled point";
    return result;
}

}  // namespace jetbracket
