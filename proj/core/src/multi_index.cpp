#include "jetbracket/multi_index.hpp"

#include <algorithm>
#include <numeric>

#include "jetbracket/errors.hpp"

namespace jetbracket {

MultiIndex MultiIndex::unit(int dims, int dir) {
    MultiIndex e(dims);
    e[dir] = 1;
    return e;
}

int MultiIndex::order() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    if (dims() != o.dims()) throw Error("multi-index dimension mismatch");
    MultiIndex r = *this;
    for (int d = 0; d < dims(); ++d) r.exp_[d] += o.exp_[d];
    return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
    if (!contains(o)) throw Error("multi-index difference would be negative");
    MultiIndex r = *this;
    for (int d = 0; d < dims(); ++d) r.exp_[d] -= o.exp_[d];
    return r;
}

bool MultiIndex::contains(const MultiIndex& o) const {
    if (dims() != o.dims()) return false;
    for (int d = 0; d < dims(); ++d)
        if (exp_[d] < o.exp_[d]) return false;
    return true;
}

int cmp_graded_lex(const MultiIndex& a, const MultiIndex& b) {
    if (a.order() != b.order()) return a.order() < b.order() ? -1 : 1;
    if (a.dims() != b.dims()) return a.dims() < b.dims() ? -1 : 1;
    for (int d = 0; d < a.dims(); ++d)
        if (a[d] != b[d]) return a[d] < b[d] ? -1 : 1;
    return 0;
}

std::vector<MultiIndex> subindices(const MultiIndex& sigma) {
    std::vector<MultiIndex> out;
    MultiIndex tau(sigma.dims());
    while (true) {
        out.push_back(tau);
        int d = 0;
        while (d < sigma.dims()) {
            if (tau[d] < sigma[d]) {
                ++tau[d];
                break;
            }
            tau[d] = 0;
            ++d;
        }
        if (d == sigma.dims()) break;
    }
    std::sort(out.begin(), out.end(),
              [](const MultiIndex& a, const MultiIndex& b) { return cmp_graded_lex(a, b) < 0; });
    return out;
}

Integer choose(const MultiIndex& sigma, const MultiIndex& tau) {
    Integer c = 1;
    for (int d = 0; d < sigma.dims(); ++d) c *= binomial(sigma[d], tau[d]);
    return c;
}

namespace {

void compositions_rec(const MultiIndex& remaining, int parts_left, std::vector<MultiIndex>& parts,
                      Integer coeff,
                      const std::function<void(const std::vector<MultiIndex>&, const Integer&)>& visit) {
    if (parts_left == 1) {
        parts.push_back(remaining);
        visit(parts, coeff);
        parts.pop_back();
        return;
    }
    for (const MultiIndex& tau : subindices(remaining)) {
        parts.push_back(tau);
        compositions_rec(remaining - tau, parts_left - 1, parts, coeff * choose(remaining, tau), visit);
        parts.pop_back();
    }
}

}  // namespace

void for_each_composition(const MultiIndex& sigma, int r,
                          const std::function<void(const std::vector<MultiIndex>&, const Integer&)>& visit) {
    if (r <= 0) throw Error("composition into zero parts");
    std::vector<MultiIndex> parts;
    parts.reserve(r);
    compositions_rec(sigma, r, parts, Integer(1), visit);
}

}  // namespace jetbracket
