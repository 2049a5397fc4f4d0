#pragma once

#include <string>
#include <vector>

#include "jetbracket/evolution.hpp"

namespace jetbracket {

struct CheckRequest {
    enum class Type { Bivector, TwoForm, Symmetry, Cosymmetry, Vanishing, Symbol, Adjoint, Compose };

    Type type = Type::Bivector;
    std::string target;   ///< operator name (Bivector/TwoForm/Symbol/Adjoint, first of Compose)
    std::string target2;  ///< second operand of Compose
    /// Resolved section for Symmetry/Cosymmetry plus its display form
    /// (a declared name or an inline tuple).
    std::vector<DiffPoly> section;
    std::string section_display;
    int k = 0;  ///< Vanishing
    StructureKind kind = StructureKind::Vector;

    bool operator==(const CheckRequest& o) const {
        return type == o.type && target == o.target && target2 == o.target2 && section == o.section &&
               k == o.k && kind == o.kind;
    }
};

struct SectionDecl {
    std::string name;
    bool covector = false;
    std::vector<DiffPoly> components;

    bool operator==(const SectionDecl& o) const {
        return name == o.name && covector == o.covector && components == o.components;
    }
};

/// Parsed problem file: variable counts, the evolution equation, named
/// operators and sections, and the requested checks in declaration order.
/// The names l_f and l_f_adj are implicitly declared once the equation is
/// complete.
struct ProblemFile {
    int n = 0;
    int m = 0;
    bool has_equation = false;
    std::vector<DiffPoly> f;
    std::vector<std::pair<std::string, CDiffOperator>> operators;
    std::vector<SectionDecl> sections;
    std::vector<CheckRequest> checks;

    const CDiffOperator* find_operator(const std::string& name) const;

    bool operator==(const ProblemFile& o) const {
        return n == o.n && m == o.m && has_equation == o.has_equation && f == o.f &&
               operators == o.operators && sections == o.sections && checks == o.checks;
    }

    /// Canonical text form; parse(to_text()) is structurally equal to *this.
    std::string to_text() const;
};

}  // namespace jetbracket
