#include "jetbracket/problem.hpp"

#include "jetbracket/printer.hpp"

namespace jetbracket {

const CDiffOperator* ProblemFile::find_operator(const std::string& name) const {
    for (const auto& [opname, op] : operators)
        if (opname == name) return &op;
    return nullptr;
}

std::string ProblemFile::to_text() const {
    std::string out;
    out += "vars x[" + std::to_string(n) + "], u[" + std::to_string(m) + "]\n";
    if (has_equation)
        for (int j = 0; j < m; ++j) {
            std::string lhs = (m == 1) ? "u" : "u" + std::to_string(j + 1);
            out += "evolve " + lhs + " = " + jetbracket::to_text(f[j], n, m) + "\n";
        }
    for (const auto& [name, op] : operators)
        out += "operator " + name + " = " + jetbracket::to_text(op) + "\n";
    for (const SectionDecl& s : sections) {
        out += (s.covector ? "covector " : "vector ") + s.name + " = (";
        for (std::size_t i = 0; i < s.components.size(); ++i) {
            if (i > 0) out += ", ";
            out += jetbracket::to_text(s.components[i], n, m);
        }
        out += ")\n";
    }
    for (const CheckRequest& c : checks) {
        out += "check ";
        switch (c.type) {
            case CheckRequest::Type::Bivector:
                out += "bivector " + c.target;
                break;
            case CheckRequest::Type::TwoForm:
                out += "2form " + c.target;
                break;
            case CheckRequest::Type::Symmetry:
            case CheckRequest::Type::Cosymmetry:
                out += c.type == CheckRequest::Type::Symmetry ? "symmetry " : "cosymmetry ";
                if (!c.section_display.empty()) {
                    out += c.section_display;
                } else {
                    out += "(";
                    for (std::size_t i = 0; i < c.section.size(); ++i) {
                        if (i > 0) out += ", ";
                        out += jetbracket::to_text(c.section[i], n, m);
                    }
                    out += ")";
                }
                break;
            case CheckRequest::Type::Vanishing:
                out += "vanishing k=" + std::to_string(c.k) +
                       (c.kind == StructureKind::Vector ? " vector" : " form");
                break;
            case CheckRequest::Type::Symbol:
                out += "symbol " + c.target;
                break;
            case CheckRequest::Type::Adjoint:
                out += "adjoint " + c.target;
                break;
            case CheckRequest::Type::Compose:
                out += "compose " + c.target + " " + c.target2;
                break;
        }
        out += "\n";
    }
    return out;
}

}  // namespace jetbracket
