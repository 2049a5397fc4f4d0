#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetbracket/problem.hpp"
#include "jetbracket/vanishing.hpp"

namespace jetbracket {

/// Outcome of a single requested check.
struct CheckRecord {
    CheckRequest request;
    /// Mathematical verdict. Informational checks (symbol, adjoint, compose)
    /// always pass; search failures are flagged separately because they are
    /// not negative mathematical answers.
    bool pass = false;
    bool search_failed = false;
    std::string verdict_note;

    // Bivector / TwoForm payload.
    std::optional<CDiffOperator> residual;
    bool residual_zero = false;
    bool skew_adjoint = false;

    // Symmetry / Cosymmetry payload.
    std::vector<DiffPoly> section_residual;

    // Vanishing payload, one entry per sample.
    std::vector<CertificateSearchResult> samples;

    // Symbol payload.
    std::optional<SymbolMatrix> symbol;
    PointAssignment symbol_rho;
    bool symbol_nondegenerate = false;

    // Adjoint / Compose payload.
    std::optional<CDiffOperator> op_result;
    bool result_skew_adjoint = false;
    bool result_self_adjoint = false;
};

struct RunOptions {
    std::uint64_t seed = 42;
    int samples = 5;
    SearchBudget budget;
    std::string input_name = "-";
};

/// Exit codes: 0 all checks pass, 1 at least one negative verdict (a valid
/// mathematical answer), 2 parse/validation error (raised before a report
/// exists), 3 certificate search failure. 3 wins over 1 when both occur.
struct Report {
    RunOptions options;
    int n = 0;
    int m = 0;
    bool has_equation = false;
    std::vector<std::string> rhs_text;
    std::vector<CheckRecord> checks;
    std::optional<Conclusion> conclusion;
    int exit_code = 0;
};

std::string render_text(const Report& report);
/// Byte-stable for fixed input and options: object keys are emitted in a
/// fixed order and all numbers are exact decimal strings.
std::string render_json(const Report& report);

}  // namespace jetbracket
