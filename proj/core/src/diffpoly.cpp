#include "jetbracket/diffpoly.hpp"

#include <algorithm>

#include "jetbracket/errors.hpp"

namespace jetbracket {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::coordinate(const JetCoordinate& c, int exponent) {
    Monomial m;
    if (exponent < 0) throw Error("negative exponent");
    if (exponent > 0) m.factors_.push_back({c, exponent});
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [c, e] : factors_) d += e;
    return d;
}

int Monomial::exponent_of(const JetCoordinate& c) const {
    for (const auto& [coord, e] : factors_)
        if (coord == c) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const {
    // Merge of two sorted factor lists.
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        int c = cmp(a->first, b->first);
        if (c < 0)
            r.factors_.push_back(*a++);
        else if (c > 0)
            r.factors_.push_back(*b++);
        else {
            r.factors_.push_back({a->first, a->second + b->second});
            ++a;
            ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, o.factors_.end());
    return r;
}

Monomial Monomial::with_exponent(const JetCoordinate& c, int e) const {
    Monomial r;
    bool placed = false;
    for (const auto& f : factors_) {
        if (f.first == c) {
            if (e > 0) r.factors_.push_back({c, e});
            placed = true;
        } else {
            r.factors_.push_back(f);
        }
    }
    if (!placed && e > 0) {
        auto pos = std::lower_bound(r.factors_.begin(), r.factors_.end(), c,
                                    [](const auto& f, const JetCoordinate& v) { return f.first < v; });
        r.factors_.insert(pos, {c, e});
    }
    return r;
}

bool Monomial::operator<(const Monomial& o) const {
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        int c = cmp(a->first, b->first);
        if (c != 0) return c < 0;
        if (a->second != b->second) return a->second < b->second;
        ++a;
        ++b;
    }
    return a == factors_.end() && b != o.factors_.end();
}

// ---------------------------------------------------------------------------
// DiffPoly

DiffPoly DiffPoly::constant(const Rational& c) {
    DiffPoly p;
    p.add_term(Monomial::one(), c);
    return p;
}

DiffPoly DiffPoly::coordinate(const JetCoordinate& c) {
    DiffPoly p;
    p.add_term(Monomial::coordinate(c), 1);
    return p;
}

DiffPoly DiffPoly::term(const Monomial& m, const Rational& c) {
    DiffPoly p;
    p.add_term(m, c);
    return p;
}

bool DiffPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational DiffPoly::constant_term() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Rational(0) : it->second;
}

void DiffPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DiffPoly DiffPoly::operator+(const DiffPoly& o) const {
    DiffPoly r = *this;
    r += o;
    return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

DiffPoly DiffPoly::operator-(const DiffPoly& o) const {
    DiffPoly r = *this;
    r -= o;
    return r;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

DiffPoly DiffPoly::operator*(const DiffPoly& o) const {
    DiffPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

DiffPoly DiffPoly::operator*(const Rational& c) const {
    DiffPoly r;
    if (c == 0) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

DiffPoly DiffPoly::pow(int e) const {
    if (e < 0) throw Error("negative polynomial power");
    DiffPoly r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

int DiffPoly::max_jet_order() const {
    int order = -1;
    for (const auto& [m, c] : terms_)
        for (const auto& [coord, e] : m.factors())
            if (coord.is_jet()) order = std::max(order, coord.sigma().order());
    return order;
}

std::set<JetCoordinate> DiffPoly::support_coordinates() const {
    std::set<JetCoordinate> s;
    for (const auto& [m, c] : terms_)
        for (const auto& [coord, e] : m.factors()) s.insert(coord);
    return s;
}

// ---------------------------------------------------------------------------
// Calculus

DiffPoly partial(const DiffPoly& p, const JetCoordinate& v) {
    DiffPoly r;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent_of(v);
        if (e == 0) continue;
        r.add_term(m.with_exponent(v, e - 1), c * e);
    }
    return r;
}

DiffPoly total_derivative(const DiffPoly& p, int dir) {
    DiffPoly r;
    for (const auto& [m, c] : p.terms()) {
        // Product rule across the factors of the monomial.
        for (const auto& [coord, e] : m.factors()) {
            DiffPoly dcoord;  // D_dir applied to the single coordinate
            switch (coord.kind()) {
                case CoordKind::Time:
                    continue;  // D_i(t) = 0
                case CoordKind::Base:
                    if (coord.index() != dir) continue;
                    dcoord = DiffPoly::constant(1);
                    break;
                case CoordKind::Jet: {
                    if (dir < 0 || dir >= coord.sigma().dims())
                        throw Error("total derivative direction out of range");
                    MultiIndex shifted = coord.sigma() + MultiIndex::unit(coord.sigma().dims(), dir);
                    dcoord = DiffPoly::coordinate(JetCoordinate::jet(coord.index(), shifted));
                    break;
                }
            }
            DiffPoly rest = DiffPoly::term(m.with_exponent(coord, e - 1), c * e);
            r += rest * dcoord;
        }
    }
    return r;
}

DiffPoly total_derivative(const DiffPoly& p, const MultiIndex& sigma) {
    DiffPoly r = p;
    for (int d = 0; d < sigma.dims(); ++d)
        for (int k = 0; k < sigma[d]; ++k) r = total_derivative(r, d);
    return r;
}

DiffPoly evolutionary_apply(const std::vector<DiffPoly>& phi, const DiffPoly& p) {
    DiffPoly r;
    std::map<std::pair<int, MultiIndex>, DiffPoly,
             bool (*)(const std::pair<int, MultiIndex>&, const std::pair<int, MultiIndex>&)>
        cache([](const std::pair<int, MultiIndex>& a, const std::pair<int, MultiIndex>& b) {
            if (a.first != b.first) return a.first < b.first;
            return cmp_graded_lex(a.second, b.second) < 0;
        });
    for (const JetCoordinate& coord : p.support_coordinates()) {
        if (!coord.is_jet()) continue;
        int j = coord.index();
        if (j < 0 || j >= static_cast<int>(phi.size()))
            throw Error("dependent index out of range in evolutionary_apply");
        auto key = std::make_pair(j, coord.sigma());
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, total_derivative(phi[j], coord.sigma())).first;
        r += it->second * partial(p, coord);
    }
    return r;
}

Rational eval_at(const DiffPoly& p, const PointAssignment& rho, std::vector<JetCoordinate>* unassigned) {
    if (unassigned)
        for (const JetCoordinate& coord : p.support_coordinates())
            if (!rho.count(coord)) unassigned->push_back(coord);
    Rational value = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational prod = c;
        for (const auto& [coord, e] : m.factors()) {
            auto it = rho.find(coord);
            if (it == rho.end() || it->second == 0) {
                prod = 0;
                break;
            }
            prod *= pow_rational(it->second, static_cast<unsigned>(e));
        }
        value += prod;
    }
    return value;
}

}  // namespace jetbracket
