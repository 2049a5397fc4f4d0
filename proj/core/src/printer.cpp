#include "jetbracket/printer.hpp"

namespace jetbracket {

namespace {

struct Piece {
    bool negative = false;
    std::string body;
};

std::string join_pieces(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0)
            out += pieces[i].negative ? "-" : "";
        else
            out += pieces[i].negative ? " - " : " + ";
        out += pieces[i].body;
    }
    return out;
}

std::string monomial_body(const Monomial& mono, int n, int m) {
    std::string out;
    for (const auto& [coord, e] : mono.factors()) {
        if (!out.empty()) out += "*";
        out += coordinate_name(coord, n, m);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

Piece term_piece(const Rational& coeff, const std::string& body) {
    Piece p;
    p.negative = coeff < 0;
    Rational a = abs(coeff);
    if (body.empty())
        p.body = to_string(a);
    else if (a == 1)
        p.body = body;
    else
        p.body = to_string(a) + "*" + body;
    return p;
}

std::vector<Piece> poly_pieces(const DiffPoly& p, int n, int m) {
    std::vector<Piece> pieces;
    for (const auto& [mono, coeff] : p.terms())
        pieces.push_back(term_piece(coeff, monomial_body(mono, n, m)));
    return pieces;
}

}  // namespace

std::string subscript_name(const MultiIndex& sigma) {
    std::string out;
    if (sigma.dims() == 1) {
        out.append(sigma[0], 'x');
        return out;
    }
    for (int d = 0; d < sigma.dims(); ++d)
        for (int k = 0; k < sigma[d]; ++k) out += "x" + std::to_string(d + 1);
    return out;
}

std::string coordinate_name(const JetCoordinate& c, int n, int m) {
    switch (c.kind()) {
        case CoordKind::Time:
            return "t";
        case CoordKind::Base:
            return n == 1 ? "x" : "x" + std::to_string(c.index() + 1);
        case CoordKind::Jet: {
            std::string name = (m == 1) ? "u" : "u" + std::to_string(c.index() + 1);
            if (c.sigma().order() > 0) name += "_" + subscript_name(c.sigma());
            return name;
        }
    }
    return "?";
}

std::string to_text(const DiffPoly& p, int n, int m) { return join_pieces(poly_pieces(p, n, m)); }

std::string to_text(const CDiffEntry& e, int n, int m) {
    std::vector<Piece> pieces;
    // Highest order first, the way operators are usually written.
    for (auto it = e.summands().rbegin(); it != e.summands().rend(); ++it) {
        const auto& [sigma, a] = *it;
        if (sigma.order() == 0) {
            std::vector<Piece> inner = poly_pieces(a, n, m);
            pieces.insert(pieces.end(), inner.begin(), inner.end());
            continue;
        }
        std::string d = "D_" + subscript_name(sigma);
        if (a.terms().size() == 1) {
            const auto& [mono, coeff] = *a.terms().begin();
            std::string body = monomial_body(mono, n, m);
            pieces.push_back(term_piece(coeff, body.empty() ? d : body + "*" + d));
        } else {
            Piece p;
            p.body = "(" + to_text(a, n, m) + ")*" + d;
            pieces.push_back(p);
        }
    }
    return join_pieces(pieces);
}

std::string to_text(const CDiffOperator& op) {
    const int n = op.base_dims();
    const int m = op.rows();
    if (op.rows() == 1 && op.cols() == 1) return to_text(op.at(0, 0), n, m);
    std::string out = "[";
    for (int i = 0; i < op.rows(); ++i) {
        if (i > 0) out += "; ";
        for (int j = 0; j < op.cols(); ++j) {
            if (j > 0) out += ", ";
            out += to_text(op.at(i, j), n, m);
        }
    }
    return out + "]";
}

std::string to_text(const MultiCDiffOperator& op) {
    if (op.is_zero()) return "0";
    const int n = op.base_dims();
    const int m = op.fiber_dims();
    std::vector<Piece> pieces;
    for (const auto& [key, coeff] : op.coefficients()) {
        std::string slots;
        for (int p = 0; p < op.arity(); ++p) {
            if (!slots.empty()) slots += "*";
            std::string arg = "xi" + std::to_string(p + 1);
            if (m > 1) arg += "^" + std::to_string(key.comps[p] + 1);
            if (key.sigmas[p].order() == 0)
                slots += "(" + arg + ")";
            else
                slots += "D_" + subscript_name(key.sigmas[p]) + "(" + arg + ")";
        }
        std::string prefix = (m > 1) ? "e" + std::to_string(key.out + 1) + ": " : "";
        Piece p;
        if (coeff.terms().size() == 1) {
            const auto& [mono, c] = *coeff.terms().begin();
            std::string body = monomial_body(mono, n, m);
            p = term_piece(c, body.empty() ? slots : body + "*" + slots);
        } else {
            p.body = "(" + to_text(coeff, n, m) + ")*" + slots;
        }
        p.body = prefix + p.body;
        pieces.push_back(p);
    }
    return join_pieces(pieces);
}

std::string to_text(const SymbolPoly& p, int blocks) {
    if (p.is_zero()) return "0";
    const int n = blocks > 0 ? p.nvars() / blocks : p.nvars();
    std::vector<Piece> pieces;
    for (const auto& [e, coeff] : p.terms()) {
        std::string body;
        for (int v = 0; v < p.nvars(); ++v) {
            if (e[v] == 0) continue;
            if (!body.empty()) body += "*";
            std::string var = "theta";
            if (blocks > 1) var += "[" + std::to_string(v / n + 1) + "]";
            if (n > 1) var += "_" + std::to_string(v % n + 1);
            body += var;
            if (e[v] > 1) body += "^" + std::to_string(e[v]);
        }
        pieces.push_back(term_piece(coeff, body));
    }
    return join_pieces(pieces);
}

std::string to_text(const PointAssignment& rho, int n, int m) {
    if (rho.empty()) return "all coordinates 0";
    std::string out;
    for (const auto& [coord, value] : rho) {
        if (!out.empty()) out += ", ";
        out += coordinate_name(coord, n, m) + "=" + to_string(value);
    }
    return out;
}

std::string to_text(const std::vector<Rational>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

}  // namespace jetbracket
