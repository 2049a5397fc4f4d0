#include "jetbracket/cdiff.hpp"

#include <algorithm>

#include "jetbracket/errors.hpp"

namespace jetbracket {

// ---------------------------------------------------------------------------
// CDiffEntry

CDiffEntry CDiffEntry::term(const MultiIndex& sigma, const DiffPoly& a) {
    CDiffEntry e;
    e.add_term(sigma, a);
    return e;
}

int CDiffEntry::order() const {
    return summands_.empty() ? -1 : summands_.rbegin()->first.order();
}

void CDiffEntry::add_term(const MultiIndex& sigma, const DiffPoly& a) {
    if (a.is_zero()) return;
    auto [it, inserted] = summands_.emplace(sigma, a);
    if (!inserted) {
        it->second += a;
        if (it->second.is_zero()) summands_.erase(it);
    }
}

CDiffEntry CDiffEntry::operator+(const CDiffEntry& o) const {
    CDiffEntry r = *this;
    for (const auto& [sigma, a] : o.summands_) r.add_term(sigma, a);
    return r;
}

CDiffEntry CDiffEntry::operator-(const CDiffEntry& o) const {
    CDiffEntry r = *this;
    for (const auto& [sigma, a] : o.summands_) r.add_term(sigma, -a);
    return r;
}

CDiffEntry CDiffEntry::operator-() const {
    CDiffEntry r;
    for (const auto& [sigma, a] : summands_) r.summands_.emplace(sigma, -a);
    return r;
}

CDiffEntry CDiffEntry::left_multiplied(const DiffPoly& a) const {
    CDiffEntry r;
    for (const auto& [sigma, b] : summands_) r.add_term(sigma, a * b);
    return r;
}

DiffPoly CDiffEntry::apply(const DiffPoly& xi) const {
    DiffPoly r;
    for (const auto& [sigma, a] : summands_) r += a * total_derivative(xi, sigma);
    return r;
}

CDiffEntry compose(const CDiffEntry& left, const CDiffEntry& right) {
    CDiffEntry r;
    for (const auto& [sigma, a] : left.summands()) {
        for (const auto& [tau, b] : right.summands()) {
            for (const MultiIndex& mu : subindices(sigma)) {
                DiffPoly coeff = a * total_derivative(b, mu) * Rational(choose(sigma, mu));
                r.add_term((sigma - mu) + tau, coeff);
            }
        }
    }
    return r;
}

namespace {

// Normal form of (-1)^{|sigma|} D_sigma o (a D_tau') collapsed over tau' = 0:
// adjoint of the single summand a D_sigma.
CDiffEntry adjoint_term(const MultiIndex& sigma, const DiffPoly& a) {
    CDiffEntry r;
    Rational sign = (sigma.order() % 2 == 0) ? 1 : -1;
    for (const MultiIndex& mu : subindices(sigma))
        r.add_term(sigma - mu, total_derivative(a, mu) * Rational(choose(sigma, mu)) * sign);
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// CDiffOperator

CDiffOperator::CDiffOperator(int n, int rows, int cols) : n_(n), rows_(rows), cols_(cols) {
    if (n < 1 || rows < 1 || cols < 1) throw Error("operator dimensions must be positive");
    entries_.resize(static_cast<std::size_t>(rows) * cols);
}

CDiffOperator CDiffOperator::identity(int n, int m) {
    return multiplication(n, m, DiffPoly::constant(1));
}

CDiffOperator CDiffOperator::multiplication(int n, int m, const DiffPoly& a) {
    CDiffOperator op(n, m, m);
    for (int i = 0; i < m; ++i) op.at(i, i).add_term(MultiIndex(n), a);
    return op;
}

CDiffOperator CDiffOperator::total_derivative_op(int n, int m, const MultiIndex& sigma) {
    CDiffOperator op(n, m, m);
    for (int i = 0; i < m; ++i) op.at(i, i).add_term(sigma, DiffPoly::constant(1));
    return op;
}

bool CDiffOperator::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const CDiffEntry& e) { return e.is_zero(); });
}

int CDiffOperator::order() const {
    int o = -1;
    for (const CDiffEntry& e : entries_) o = std::max(o, e.order());
    return o;
}

std::vector<DiffPoly> CDiffOperator::apply(const std::vector<DiffPoly>& xi) const {
    if (static_cast<int>(xi.size()) != cols_)
        throw Error("operator application: expected " + std::to_string(cols_) + " components, got " +
                    std::to_string(xi.size()));
    std::vector<DiffPoly> out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i] += at(i, j).apply(xi[j]);
    return out;
}

CDiffOperator CDiffOperator::operator+(const CDiffOperator& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || n_ != o.n_) throw Error("operator sum: shape mismatch");
    CDiffOperator r = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + o.entries_[k];
    return r;
}

CDiffOperator CDiffOperator::operator-(const CDiffOperator& o) const { return *this + (-o); }

CDiffOperator CDiffOperator::operator-() const {
    CDiffOperator r = *this;
    for (CDiffEntry& e : r.entries_) e = -e;
    return r;
}

bool CDiffOperator::operator==(const CDiffOperator& o) const {
    return n_ == o.n_ && rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

CDiffOperator compose(const CDiffOperator& left, const CDiffOperator& right) {
    if (left.cols() != right.rows()) throw Error("compose: inner dimensions do not match");
    if (left.base_dims() != right.base_dims()) throw Error("compose: base dimension mismatch");
    CDiffOperator r(left.base_dims(), left.rows(), right.cols());
    for (int i = 0; i < left.rows(); ++i)
        for (int k = 0; k < right.cols(); ++k) {
            CDiffEntry acc;
            for (int j = 0; j < left.cols(); ++j)
                acc = acc + compose(left.at(i, j), right.at(j, k));
            r.at(i, k) = acc;
        }
    return r;
}

CDiffOperator adjoint(const CDiffOperator& op) {
    CDiffOperator r(op.base_dims(), op.cols(), op.rows());
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) {
            CDiffEntry acc;
            for (const auto& [sigma, a] : op.at(j, i).summands()) acc = acc + adjoint_term(sigma, a);
            r.at(i, j) = acc;
        }
    return r;
}

std::vector<DiffPoly> greens_current(const CDiffOperator& op, const std::vector<DiffPoly>& p,
                                     const std::vector<DiffPoly>& q) {
    if (static_cast<int>(p.size()) != op.cols() || static_cast<int>(q.size()) != op.rows())
        throw Error("greens_current: vector dimensions do not match the operator");
    std::vector<DiffPoly> current(op.base_dims());
    for (int i = 0; i < op.rows(); ++i) {
        for (int j = 0; j < op.cols(); ++j) {
            for (const auto& [sigma, a] : op.at(i, j).summands()) {
                // q_i a D_sigma(p_j): peel the lowest direction of sigma one
                // derivative at a time. Invariant for each step with g D_s(p):
                //   g D_k(D_{s'} p) = D_k(g D_{s'} p) - D_k(g) D_{s'} p.
                DiffPoly g = q[i] * a;
                MultiIndex s = sigma;
                while (s.order() > 0) {
                    int k = 0;
                    while (s[k] == 0) ++k;
                    s = s - MultiIndex::unit(s.dims(), k);
                    current[k] += g * total_derivative(p[j], s);
                    g = -total_derivative(g, k);
                }
            }
        }
    }
    return current;
}

bool is_skew_adjoint(const CDiffOperator& op) {
    if (!op.is_square()) throw Error("is_skew_adjoint: operator must be square");
    return (adjoint(op) + op).is_zero();
}

bool is_self_adjoint(const CDiffOperator& op) {
    if (!op.is_square()) throw Error("is_self_adjoint: operator must be square");
    return (adjoint(op) - op).is_zero();
}

CDiffOperator map_coefficients(const CDiffOperator& op,
                               const std::function<DiffPoly(const DiffPoly&)>& fn) {
    CDiffOperator r(op.base_dims(), op.rows(), op.cols());
    for (int i = 0; i < op.rows(); ++i)
        for (int j = 0; j < op.cols(); ++j)
            for (const auto& [sigma, a] : op.at(i, j).summands()) r.at(i, j).add_term(sigma, fn(a));
    return r;
}

}  // namespace jetbracket
