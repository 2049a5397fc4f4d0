#include "jetbracket/runner.hpp"

#include "jetbracket/errors.hpp"
#include "jetbracket/parser.hpp"
#include "jetbracket/printer.hpp"

namespace jetbracket {

namespace {

const char* check_name(CheckRequest::Type t) {
    switch (t) {
        case CheckRequest::Type::Bivector: return "bivector";
        case CheckRequest::Type::TwoForm: return "2form";
        case CheckRequest::Type::Symmetry: return "symmetry";
        case CheckRequest::Type::Cosymmetry: return "cosymmetry";
        case CheckRequest::Type::Vanishing: return "vanishing";
        case CheckRequest::Type::Symbol: return "symbol";
        case CheckRequest::Type::Adjoint: return "adjoint";
        case CheckRequest::Type::Compose: return "compose";
    }
    return "?";
}

class Executor {
public:
    Executor(const ProblemFile& problem, const RunOptions& options)
        : problem_(problem), options_(options) {
        if (problem.has_equation) eq_.emplace(problem.n, problem.m, problem.f);
    }

    Report execute() {
        Report report;
        report.options = options_;
        report.n = problem_.n;
        report.m = problem_.m;
        report.has_equation = problem_.has_equation;
        if (problem_.has_equation)
            for (const DiffPoly& comp : problem_.f)
                report.rhs_text.push_back(to_text(comp, problem_.n, problem_.m));

        for (std::size_t i = 0; i < problem_.checks.size(); ++i) {
            try {
                report.checks.push_back(run_check(problem_.checks[i]));
            } catch (const Error& e) {
                throw Error("check " + std::to_string(i + 1) + " (" +
                            check_name(problem_.checks[i].type) + "): " + e.what());
            }
        }

        attach_conclusion(report);

        bool any_fail = false;
        bool any_search_failure = false;
        for (const CheckRecord& rec : report.checks) {
            any_fail = any_fail || (!rec.pass && !rec.search_failed);
            any_search_failure = any_search_failure || rec.search_failed;
        }
        report.exit_code = any_search_failure ? 3 : (any_fail ? 1 : 0);
        return report;
    }

private:
    const ProblemFile& problem_;
    const RunOptions& options_;
    std::optional<EvolutionEquation> eq_;

    const EvolutionEquation& equation() const {
        if (!eq_) throw Error("the evolution equation is not declared");
        return *eq_;
    }

    CDiffOperator resolve(const std::string& name) const {
        if (name == "l_f") return equation().linearization();
        if (name == "l_f_adj") return equation().adjoint_linearization();
        const CDiffOperator* op = problem_.find_operator(name);
        if (!op) throw Error("unknown operator '" + name + "'");
        return *op;
    }

    CheckRecord run_check(const CheckRequest& req) {
        CheckRecord rec;
        rec.request = req;
        switch (req.type) {
            case CheckRequest::Type::Bivector:
            case CheckRequest::Type::TwoForm: {
                const CDiffOperator op = resolve(req.target);
                CDiffOperator residual = req.type == CheckRequest::Type::Bivector
                                             ? bivector_residual(equation(), op)
                                             : twoform_residual(equation(), op);
                rec.residual_zero = residual.is_zero();
                rec.skew_adjoint = is_skew_adjoint(op);
                rec.residual = std::move(residual);
                rec.pass = rec.residual_zero && rec.skew_adjoint;
                if (!rec.residual_zero)
                    rec.verdict_note = "flow-invariance residual is nonzero";
                else if (!rec.skew_adjoint)
                    rec.verdict_note = "residual vanishes but the operator is not skew-adjoint";
                break;
            }
            case CheckRequest::Type::Symmetry:
            case CheckRequest::Type::Cosymmetry: {
                SectionResidual sr = req.type == CheckRequest::Type::Symmetry
                                         ? symmetry_residual(equation(), req.section)
                                         : cosymmetry_residual(equation(), req.section);
                rec.section_residual = std::move(sr.residual);
                rec.pass = sr.zero;
                break;
            }
            case CheckRequest::Type::Vanishing: {
                rec.samples = certify_samples(equation(), req.k, req.kind, options_.samples,
                                              options_.budget, options_.seed);
                rec.pass = true;
                for (const CertificateSearchResult& s : rec.samples) {
                    if (s.outcome == SearchOutcome::Certified) continue;
                    rec.pass = false;
                    rec.verdict_note = s.diagnostic;
                    // Order violation is an exact negative answer; the other
                    // outcomes only mean the search could not decide.
                    if (s.outcome != SearchOutcome::OrderTooLow) rec.search_failed = true;
                }
                break;
            }
            case CheckRequest::Type::Symbol: {
                const CDiffOperator op = resolve(req.target);
                if (op.is_zero()) throw Error("the zero operator has no principal symbol");
                // Prefer the all-zero point; sample only if the order drops there.
                Rng rng(options_.seed);
                PointAssignment rho;
                if (order_at(op, rho) != op.order()) {
                    std::set<JetCoordinate> coords;
                    for (int i = 0; i < op.rows(); ++i)
                        for (int j = 0; j < op.cols(); ++j)
                            for (const auto& [sigma, a] : op.at(i, j).summands())
                                for (const JetCoordinate& c : a.support_coordinates())
                                    coords.insert(c);
                    for (int attempt = 0; attempt < options_.budget.point_attempts; ++attempt) {
                        PointAssignment candidate;
                        for (const JetCoordinate& c : coords) candidate[c] = rng.small_rational();
                        if (order_at(op, candidate) == op.order()) {
                            rho = std::move(candidate);
                            break;
                        }
                    }
                    if (order_at(op, rho) != op.order()) {
                        rec.search_failed = true;
                        rec.verdict_note = "no sampled point keeps the full operator order";
                        break;
                    }
                }
                SymbolMatrix lambda = principal_symbol(op, rho);
                rec.symbol_nondegenerate = is_nondegenerate(lambda);
                rec.symbol = std::move(lambda);
                rec.symbol_rho = std::move(rho);
                rec.pass = true;
                break;
            }
            case CheckRequest::Type::Adjoint: {
                CDiffOperator result = adjoint(resolve(req.target));
                rec.result_skew_adjoint = is_skew_adjoint(result);
                rec.result_self_adjoint = is_self_adjoint(result);
                rec.op_result = std::move(result);
                rec.pass = true;
                break;
            }
            case CheckRequest::Type::Compose: {
                rec.op_result = compose(resolve(req.target), resolve(req.target2));
                if (rec.op_result->is_square()) {
                    rec.result_skew_adjoint = is_skew_adjoint(*rec.op_result);
                    rec.result_self_adjoint = is_self_adjoint(*rec.op_result);
                }
                rec.pass = true;
                break;
            }
        }
        return rec;
    }

    void attach_conclusion(Report& report) const {
        std::vector<CertificateSearchResult> vector_certs;
        std::vector<CertificateSearchResult> form_certs;
        std::vector<std::string> bivectors;
        std::vector<std::string> twoforms;
        bool any_vanishing = false;
        for (const CheckRecord& rec : report.checks) {
            switch (rec.request.type) {
                case CheckRequest::Type::Vanishing:
                    any_vanishing = true;
                    if (rec.request.k == 3) {
                        auto& dst = rec.request.kind == StructureKind::Vector ? vector_certs : form_certs;
                        dst.insert(dst.end(), rec.samples.begin(), rec.samples.end());
                    }
                    break;
                case CheckRequest::Type::Bivector:
                    if (rec.pass) bivectors.push_back(rec.request.target);
                    break;
                case CheckRequest::Type::TwoForm:
                    if (rec.pass) twoforms.push_back(rec.request.target);
                    break;
                default:
                    break;
            }
        }
        if (any_vanishing)
            report.conclusion = conclude(equation(), vector_certs, form_certs, bivectors, twoforms);
    }
};

}  // namespace

Report run(const ProblemFile& problem, const RunOptions& options) {
    return Executor(problem, options).execute();
}

}  // namespace jetbracket
