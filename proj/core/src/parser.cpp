#include "jetbracket/parser.hpp"

#include <cctype>
#include <optional>

#include "jetbracket/errors.hpp"

namespace jetbracket {

namespace {

struct Token {
    enum class Kind { Ident, Int, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int col = 1;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> tokens;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto bump = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            bump(c);
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') {
                bump(text[i]);
                ++i;
            }
            continue;
        }
        Token tok;
        tok.line = line;
        tok.col = col;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            tok.kind = Token::Kind::Ident;
            tok.text = text.substr(i, j - i);
            while (i < j) bump(text[i++]);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            tok.kind = Token::Kind::Int;
            tok.text = text.substr(i, j - i);
            while (i < j) bump(text[i++]);
        } else if (std::string("=+-*^()[],;/").find(c) != std::string::npos) {
            tok.kind = Token::Kind::Punct;
            tok.text = std::string(1, c);
            bump(c);
            ++i;
        } else {
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        tokens.push_back(std::move(tok));
    }
    Token end;
    end.line = line;
    end.col = col;
    tokens.push_back(end);
    return tokens;
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(lex(text)) {}

    ProblemFile parse_file() {
        ProblemFile file;
        std::vector<bool> have_component;
        while (!at_end()) {
            const Token& kw = expect_ident("declaration keyword");
            if (kw.text == "vars") {
                if (file.n != 0) throw ParseError(kw.line, kw.col, "duplicate vars declaration");
                parse_vars(file);
                have_component.assign(file.m, false);
            } else if (kw.text == "evolve") {
                require_vars(file, kw);
                parse_evolve(file, have_component);
            } else if (kw.text == "operator") {
                require_vars(file, kw);
                parse_operator_decl(file);
            } else if (kw.text == "vector" || kw.text == "covector") {
                require_vars(file, kw);
                parse_section_decl(file, kw.text == "covector");
            } else if (kw.text == "check") {
                require_vars(file, kw);
                parse_check(file);
            } else {
                throw ParseError(kw.line, kw.col, "unknown declaration '" + kw.text + "'");
            }
        }
        return file;
    }

    DiffPoly parse_single_expression(int n, int m) {
        n_ = n;
        m_ = m;
        DiffPoly p = parse_expr();
        expect_end();
        return p;
    }

    CDiffOperator parse_single_operator(int n, int m) {
        n_ = n;
        m_ = m;
        CDiffOperator op = parse_opexpr();
        expect_end();
        return op;
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int n_ = 0;
    int m_ = 0;

    const Token& peek(int ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    bool at_end() const { return peek().kind == Token::Kind::End; }

    bool match_punct(const char* p) {
        if (peek().kind == Token::Kind::Punct && peek().text == p) {
            advance();
            return true;
        }
        return false;
    }

    const Token& expect_punct(const char* p) {
        if (peek().kind != Token::Kind::Punct || peek().text != p)
            throw ParseError(peek().line, peek().col, std::string("expected '") + p + "'");
        return advance();
    }

    const Token& expect_ident(const char* what) {
        if (peek().kind != Token::Kind::Ident)
            throw ParseError(peek().line, peek().col, std::string("expected ") + what);
        return advance();
    }

    int expect_small_int(const char* what) {
        if (peek().kind != Token::Kind::Int)
            throw ParseError(peek().line, peek().col, std::string("expected ") + what);
        const Token& tok = advance();
        if (tok.text.size() > 6) throw ParseError(tok.line, tok.col, "integer out of range");
        return std::stoi(tok.text);
    }

    void expect_end() {
        if (!at_end()) throw ParseError(peek().line, peek().col, "trailing input after expression");
    }

    static void require_vars(const ProblemFile& file, const Token& at) {
        if (file.n == 0) throw ParseError(at.line, at.col, "vars must be declared first");
    }

    // -- declarations --------------------------------------------------------

    void parse_vars(ProblemFile& file) {
        const Token& x = expect_ident("'x'");
        if (x.text != "x") throw ParseError(x.line, x.col, "expected 'x'");
        expect_punct("[");
        int n = expect_small_int("base dimension");
        expect_punct("]");
        expect_punct(",");
        const Token& u = expect_ident("'u'");
        if (u.text != "u") throw ParseError(u.line, u.col, "expected 'u'");
        expect_punct("[");
        int m = expect_small_int("fiber dimension");
        expect_punct("]");
        if (n < 1 || m < 1) throw ParseError(x.line, x.col, "vars: dimensions must be at least 1");
        file.n = n_ = n;
        file.m = m_ = m;
        file.f.assign(m, DiffPoly());
    }

    int parse_dependent_name(const Token& tok) const {
        const std::string& s = tok.text;
        if (s == "u") {
            if (m_ != 1) throw ParseError(tok.line, tok.col, "with u[m > 1], write u1..u" + std::to_string(m_));
            return 0;
        }
        if (s.size() > 1 && s[0] == 'u' && std::isdigit(static_cast<unsigned char>(s[1]))) {
            int j = std::stoi(s.substr(1));
            if (j < 1 || j > m_)
                throw ParseError(tok.line, tok.col, "dependent index out of range in '" + s + "'");
            return j - 1;
        }
        throw ParseError(tok.line, tok.col, "expected a dependent variable (u or u1..)");
    }

    void parse_evolve(ProblemFile& file, std::vector<bool>& have_component) {
        const Token& lhs = expect_ident("dependent variable");
        if (lhs.text.find('_') != std::string::npos)
            throw ParseError(lhs.line, lhs.col,
                             "the left-hand side must be an undifferentiated dependent variable");
        int j = parse_dependent_name(lhs);
        if (have_component[j])
            throw ParseError(lhs.line, lhs.col, "duplicate evolution law for '" + lhs.text + "'");
        expect_punct("=");
        file.f[j] = parse_expr();
        have_component[j] = true;
        file.has_equation = true;
        for (bool h : have_component) file.has_equation = file.has_equation && h;
    }

    void check_operator_name(const Token& name, const ProblemFile& file) const {
        if (name.text == "l_f" || name.text == "l_f_adj")
            throw ParseError(name.line, name.col, "'" + name.text + "' is a reserved operator name");
        if (file.find_operator(name.text))
            throw ParseError(name.line, name.col, "duplicate operator '" + name.text + "'");
    }

    void parse_operator_decl(ProblemFile& file) {
        const Token& name = expect_ident("operator name");
        check_operator_name(name, file);
        expect_punct("=");
        file.operators.emplace_back(name.text, parse_opexpr());
    }

    void parse_section_decl(ProblemFile& file, bool covector) {
        const Token& name = expect_ident("section name");
        for (const SectionDecl& s : file.sections)
            if (s.name == name.text)
                throw ParseError(name.line, name.col, "duplicate section '" + name.text + "'");
        expect_punct("=");
        SectionDecl decl;
        decl.name = name.text;
        decl.covector = covector;
        decl.components = parse_expr_tuple();
        file.sections.push_back(std::move(decl));
    }

    std::vector<DiffPoly> parse_expr_tuple() {
        const Token& open = expect_punct("(");
        std::vector<DiffPoly> components;
        components.push_back(parse_expr());
        while (match_punct(",")) components.push_back(parse_expr());
        expect_punct(")");
        if (static_cast<int>(components.size()) != m_)
            throw ParseError(open.line, open.col,
                             "expected " + std::to_string(m_) + " components, got " +
                                 std::to_string(components.size()));
        return components;
    }

    std::string parse_operator_ref(const ProblemFile& file) {
        const Token& name = expect_ident("operator name");
        if (name.text == "l_f" || name.text == "l_f_adj") {
            if (!file.has_equation)
                throw ParseError(name.line, name.col,
                                 "'" + name.text + "' requires the evolution equation to be declared");
            return name.text;
        }
        if (!file.find_operator(name.text))
            throw ParseError(name.line, name.col, "undeclared operator '" + name.text + "'");
        return name.text;
    }

    void require_equation(const ProblemFile& file, const Token& at) const {
        if (!file.has_equation)
            throw ParseError(at.line, at.col, "this check requires the evolution equation");
    }

    void parse_check(ProblemFile& file) {
        CheckRequest req;
        const Token& what = peek();
        if (what.kind == Token::Kind::Int && what.text == "2" && peek(1).kind == Token::Kind::Ident &&
            peek(1).text == "form") {
            advance();
            advance();
            require_equation(file, what);
            req.type = CheckRequest::Type::TwoForm;
            req.target = parse_operator_ref(file);
        } else {
            const Token& kw = expect_ident("check kind");
            if (kw.text == "bivector") {
                require_equation(file, kw);
                req.type = CheckRequest::Type::Bivector;
                req.target = parse_operator_ref(file);
            } else if (kw.text == "symmetry" || kw.text == "cosymmetry") {
                require_equation(file, kw);
                req.type = kw.text == "symmetry" ? CheckRequest::Type::Symmetry
                                                 : CheckRequest::Type::Cosymmetry;
                if (peek().kind == Token::Kind::Ident) {
                    const Token& name = advance();
                    const SectionDecl* found = nullptr;
                    for (const SectionDecl& s : file.sections)
                        if (s.name == name.text) found = &s;
                    if (!found)
                        throw ParseError(name.line, name.col, "undeclared section '" + name.text + "'");
                    req.section = found->components;
                    req.section_display = found->name;
                } else {
                    req.section = parse_expr_tuple();
                }
            } else if (kw.text == "vanishing") {
                require_equation(file, kw);
                req.type = CheckRequest::Type::Vanishing;
                const Token& k = expect_ident("'k'");
                if (k.text != "k") throw ParseError(k.line, k.col, "expected 'k'");
                expect_punct("=");
                req.k = expect_small_int("k value");
                if (req.k < 3)
                    throw ParseError(k.line, k.col, "vanishing certificates need k >= 3");
                const Token& kind = expect_ident("'vector' or 'form'");
                if (kind.text == "vector")
                    req.kind = StructureKind::Vector;
                else if (kind.text == "form")
                    req.kind = StructureKind::Form;
                else
                    throw ParseError(kind.line, kind.col, "expected 'vector' or 'form'");
            } else if (kw.text == "symbol") {
                req.type = CheckRequest::Type::Symbol;
                req.target = parse_operator_ref(file);
            } else if (kw.text == "adjoint") {
                req.type = CheckRequest::Type::Adjoint;
                req.target = parse_operator_ref(file);
            } else if (kw.text == "compose") {
                req.type = CheckRequest::Type::Compose;
                req.target = parse_operator_ref(file);
                req.target2 = parse_operator_ref(file);
            } else {
                throw ParseError(kw.line, kw.col, "unknown check '" + kw.text + "'");
            }
        }
        file.checks.push_back(std::move(req));
    }

    // -- scalar expressions ---------------------------------------------------

    MultiIndex parse_subscript(const std::string& sub, const Token& tok) const {
        MultiIndex sigma(n_);
        if (sub.empty()) throw ParseError(tok.line, tok.col, "empty subscript in '" + tok.text + "'");
        std::size_t i = 0;
        while (i < sub.size()) {
            if (sub[i] != 'x')
                throw ParseError(tok.line, tok.col,
                                 "jet subscripts use spatial directions only (x, x1, ...) in '" +
                                     tok.text + "'");
            ++i;
            std::size_t j = i;
            while (j < sub.size() && std::isdigit(static_cast<unsigned char>(sub[j]))) ++j;
            int dir;
            if (j == i) {
                if (n_ != 1)
                    throw ParseError(tok.line, tok.col,
                                     "with x[n > 1], subscripts must use x1..x" + std::to_string(n_));
                dir = 0;
            } else {
                dir = std::stoi(sub.substr(i, j - i)) - 1;
                if (dir < 0 || dir >= n_)
                    throw ParseError(tok.line, tok.col, "direction out of range in '" + tok.text + "'");
            }
            ++sigma[dir];
            i = j;
        }
        return sigma;
    }

    DiffPoly resolve_atom(const Token& tok) const {
        const std::string& s = tok.text;
        std::size_t underscore = s.find('_');
        std::string head = s.substr(0, underscore == std::string::npos ? s.size() : underscore);
        std::string sub = underscore == std::string::npos ? "" : s.substr(underscore + 1);

        if (head == "t") {
            if (!sub.empty()) throw ParseError(tok.line, tok.col, "t has no subscripts");
            return DiffPoly::coordinate(JetCoordinate::time());
        }
        if (head == "x" || (head.size() > 1 && head[0] == 'x' &&
                            std::isdigit(static_cast<unsigned char>(head[1])))) {
            if (!sub.empty()) throw ParseError(tok.line, tok.col, "base variables have no subscripts");
            int dir = 0;
            if (head != "x") {
                dir = std::stoi(head.substr(1)) - 1;
            } else if (n_ != 1) {
                throw ParseError(tok.line, tok.col, "with x[n > 1], write x1..x" + std::to_string(n_));
            }
            if (dir < 0 || dir >= n_)
                throw ParseError(tok.line, tok.col, "base index out of range in '" + s + "'");
            return DiffPoly::coordinate(JetCoordinate::base(dir));
        }
        if (head == "u" || (head.size() > 1 && head[0] == 'u' &&
                            std::isdigit(static_cast<unsigned char>(head[1])))) {
            Token head_tok = tok;
            head_tok.text = head;
            int dep = parse_dependent_name(head_tok);
            MultiIndex sigma = sub.empty() ? MultiIndex(n_) : parse_subscript(sub, tok);
            return DiffPoly::coordinate(JetCoordinate::jet(dep, std::move(sigma)));
        }
        throw ParseError(tok.line, tok.col, "undeclared identifier '" + s + "'");
    }

    Rational parse_rational_literal() {
        const Token& num = advance();  // Int, checked by caller
        std::string text = num.text;
        if (peek().kind == Token::Kind::Punct && peek().text == "/" &&
            peek(1).kind == Token::Kind::Int) {
            advance();
            text += "/" + advance().text;
        }
        return rational_from_string(text);
    }

    DiffPoly parse_expr() {
        bool negative = false;
        while (true) {
            if (match_punct("-"))
                negative = !negative;
            else if (!match_punct("+"))
                break;
        }
        DiffPoly acc = parse_term();
        if (negative) acc = -acc;
        while (peek().kind == Token::Kind::Punct && (peek().text == "+" || peek().text == "-")) {
            bool minus = advance().text == "-";
            DiffPoly rhs = parse_term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    DiffPoly parse_term() {
        DiffPoly acc = parse_power();
        while (match_punct("*")) acc = acc * parse_power();
        return acc;
    }

    DiffPoly parse_power() {
        DiffPoly base = parse_atom();
        if (match_punct("^")) {
            int e = expect_small_int("exponent");
            base = base.pow(e);
        }
        return base;
    }

    DiffPoly parse_atom() {
        const Token& tok = peek();
        if (tok.kind == Token::Kind::Int) return DiffPoly::constant(parse_rational_literal());
        if (tok.kind == Token::Kind::Punct && tok.text == "(") {
            advance();
            DiffPoly inner = parse_expr();
            expect_punct(")");
            return inner;
        }
        if (tok.kind == Token::Kind::Punct && (tok.text == "-" || tok.text == "+")) {
            advance();
            DiffPoly inner = parse_power();
            return tok.text == "-" ? -inner : inner;
        }
        if (tok.kind == Token::Kind::Ident) {
            if (tok.text == "D" || tok.text.rfind("D_", 0) == 0)
                throw ParseError(tok.line, tok.col,
                                 "D_sigma is not allowed inside scalar expressions");
            if (peek(1).kind == Token::Kind::Punct && peek(1).text == "(")
                throw ParseError(tok.line, tok.col,
                                 "non-polynomial right-hand side: '" + tok.text +
                                     "(...)' is not part of the expression language");
            advance();
            return resolve_atom(tok);
        }
        throw ParseError(tok.line, tok.col, "expected an expression");
    }

    // -- operator expressions -------------------------------------------------

    MultiIndex parse_d_factor() {
        const Token& tok = advance();
        if (tok.text == "D")
            throw ParseError(tok.line, tok.col,
                             "bare D is not allowed; write D_x / D_x1 with an explicit subscript");
        MultiIndex sigma = parse_subscript(tok.text.substr(2), tok);
        if (peek().kind == Token::Kind::Punct && peek().text == "^")
            throw ParseError(peek().line, peek().col,
                             "powers of D are written by repeating the subscript (D_xx, D_xxx)");
        return sigma;
    }

    CDiffEntry parse_opterm() {
        DiffPoly coeff = DiffPoly::constant(1);
        std::optional<MultiIndex> sigma;
        while (true) {
            const Token& tok = peek();
            if (tok.kind == Token::Kind::Ident && (tok.text == "D" || tok.text.rfind("D_", 0) == 0)) {
                if (sigma)
                    throw ParseError(tok.line, tok.col, "at most one D_sigma factor per operator term");
                sigma = parse_d_factor();
            } else {
                if (sigma)
                    throw ParseError(tok.line, tok.col,
                                     "coefficients must be written to the left of D_sigma "
                                     "(the normal form is a*D_sigma)");
                coeff = coeff * parse_power();
            }
            if (!match_punct("*")) break;
        }
        return CDiffEntry::term(sigma ? *sigma : MultiIndex(n_), coeff);
    }

    CDiffEntry parse_opsum() {
        CDiffEntry acc;
        bool first = true;
        bool minus = false;
        while (true) {
            if (first) {
                while (true) {
                    if (match_punct("-"))
                        minus = !minus;
                    else if (!match_punct("+"))
                        break;
                }
            }
            CDiffEntry term = parse_opterm();
            acc = minus ? acc - term : acc + term;
            first = false;
            if (peek().kind == Token::Kind::Punct && (peek().text == "+" || peek().text == "-"))
                minus = advance().text == "-";
            else
                break;
        }
        return acc;
    }

    CDiffOperator parse_opexpr() {
        if (peek().kind == Token::Kind::Punct && peek().text == "[") {
            const Token& open = advance();
            std::vector<std::vector<CDiffEntry>> rows;
            do {
                std::vector<CDiffEntry> row;
                row.push_back(parse_opsum());
                while (match_punct(",")) row.push_back(parse_opsum());
                rows.push_back(std::move(row));
            } while (match_punct(";"));
            expect_punct("]");
            if (static_cast<int>(rows.size()) != m_)
                throw ParseError(open.line, open.col,
                                 "operator matrix must have " + std::to_string(m_) + " rows");
            for (const auto& row : rows)
                if (static_cast<int>(row.size()) != m_)
                    throw ParseError(open.line, open.col,
                                     "operator matrix must have " + std::to_string(m_) + " columns");
            CDiffOperator op(n_, m_, m_);
            for (int i = 0; i < m_; ++i)
                for (int j = 0; j < m_; ++j) op.at(i, j) = rows[i][j];
            return op;
        }
        if (m_ != 1)
            throw ParseError(peek().line, peek().col,
                             "with u[m > 1], operators are written as [entry, ...; ...] matrices");
        CDiffOperator op(n_, 1, 1);
        op.at(0, 0) = parse_opsum();
        return op;
    }
};

}  // namespace

ProblemFile parse_problem(const std::string& text) { return Parser(text).parse_file(); }

DiffPoly parse_expression(const std::string& text, int n, int m) {
    return Parser(text).parse_single_expression(n, m);
}

CDiffOperator parse_operator(const std::string& text, int n, int m) {
    return Parser(text).parse_single_operator(n, m);
}

}  // namespace jetbracket
