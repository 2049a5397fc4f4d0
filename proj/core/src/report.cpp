#include "jetbracket/report.hpp"

#include <json.hpp>
#include <sstream>

#include "jetbracket/printer.hpp"

namespace jetbracket {

namespace {

using Json = nlohmann::ordered_json;

const char* check_label(CheckRequest::Type t) {
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

const char* outcome_label(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::Certified: return "certified";
        case SearchOutcome::OrderTooLow: return "order-too-low";
        case SearchOutcome::NoRegularPoint: return "no-regular-point";
        case SearchOutcome::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

Json poly_json(const DiffPoly& p, int n, int m) {
    Json terms = Json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        Json monomial = Json::array();
        for (const auto& [coord, e] : mono.factors())
            monomial.push_back(Json::array({coordinate_name(coord, n, m), e}));
        terms.push_back(Json{{"monomial", monomial}, {"value", to_string(coeff)}});
    }
    return terms;
}

Json operator_json(const CDiffOperator& op) {
    const int n = op.base_dims();
    const int m = op.rows();
    Json entries = Json::array();
    for (int i = 0; i < op.rows(); ++i)
        for (int j = 0; j < op.cols(); ++j) {
            if (op.at(i, j).is_zero()) continue;
            Json terms = Json::array();
            for (const auto& [sigma, a] : op.at(i, j).summands())
                terms.push_back(Json{{"sigma", sigma.exponents()}, {"coeff", poly_json(a, n, m)}});
            entries.push_back(Json{{"row", i}, {"col", j}, {"terms", terms}});
        }
    return entries;
}

Json rho_json(const PointAssignment& rho, int n, int m) {
    Json out = Json::object();
    for (const auto& [coord, value] : rho) out[coordinate_name(coord, n, m)] = to_string(value);
    return out;
}

Json rationals_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const Rational& q : v) out.push_back(to_string(q));
    return out;
}

Json certificate_json(const VanishingCertificate& cert, int n, int m) {
    return Json{{"k", cert.k},
                {"kind", cert.kind == StructureKind::Vector ? "vector" : "form"},
                {"rho", rho_json(cert.rho, n, m)},
                {"v", rationals_json(cert.v)},
                {"alpha", rationals_json(cert.alpha)},
                {"det_lambda_v", to_string(cert.det_lambda_v)},
                {"system_det", to_string(cert.system_det)},
                {"l", cert.l},
                {"seed", cert.seed}};
}

std::string verdict_label(const CheckRecord& rec) {
    if (rec.search_failed) return "search-failed";
    return rec.pass ? "pass" : "fail";
}

Json check_json(const CheckRecord& rec, int n, int m) {
    const CheckRequest& req = rec.request;
    Json j{{"check", check_label(req.type)}};
    switch (req.type) {
        case CheckRequest::Type::Bivector:
        case CheckRequest::Type::TwoForm:
            j["target"] = req.target;
            break;
        case CheckRequest::Type::Symmetry:
        case CheckRequest::Type::Cosymmetry: {
            Json section = Json::array();
            for (const DiffPoly& c : req.section) section.push_back(to_text(c, n, m));
            j["section"] = section;
            if (!req.section_display.empty()) j["section_name"] = req.section_display;
            break;
        }
        case CheckRequest::Type::Vanishing:
            j["k"] = req.k;
            j["flavor"] = req.kind == StructureKind::Vector ? "vector" : "form";
            break;
        case CheckRequest::Type::Symbol:
        case CheckRequest::Type::Adjoint:
            j["target"] = req.target;
            break;
        case CheckRequest::Type::Compose:
            j["target"] = req.target;
            j["target2"] = req.target2;
            break;
    }
    j["verdict"] = verdict_label(rec);
    if (!rec.verdict_note.empty()) j["note"] = rec.verdict_note;

    switch (req.type) {
        case CheckRequest::Type::Bivector:
        case CheckRequest::Type::TwoForm:
            j["residual_zero"] = rec.residual_zero;
            j["skew_adjoint"] = rec.skew_adjoint;
            j["residual"] = operator_json(*rec.residual);
            j["residual_pretty"] = to_text(*rec.residual);
            break;
        case CheckRequest::Type::Symmetry:
        case CheckRequest::Type::Cosymmetry: {
            Json res = Json::array();
            Json pretty = Json::array();
            for (const DiffPoly& c : rec.section_residual) {
                res.push_back(poly_json(c, n, m));
                pretty.push_back(to_text(c, n, m));
            }
            j["residual"] = res;
            j["residual_pretty"] = pretty;
            break;
        }
        case CheckRequest::Type::Vanishing: {
            Json samples = Json::array();
            for (const CertificateSearchResult& s : rec.samples) {
                Json sj{{"outcome", outcome_label(s.outcome)}};
                if (!s.diagnostic.empty()) sj["diagnostic"] = s.diagnostic;
                if (s.certificate) sj["certificate"] = certificate_json(*s.certificate, n, m);
                samples.push_back(sj);
            }
            j["samples"] = samples;
            break;
        }
        case CheckRequest::Type::Symbol:
            if (rec.symbol) {
                j["rho"] = rho_json(rec.symbol_rho, n, m);
                j["order"] = rec.symbol->degree();
                Json matrix = Json::array();
                for (int r = 0; r < rec.symbol->size(); ++r) {
                    Json row = Json::array();
                    for (int c = 0; c < rec.symbol->size(); ++c)
                        row.push_back(to_text(rec.symbol->at(r, c)));
                    matrix.push_back(row);
                }
                j["matrix"] = matrix;
                j["nondegenerate"] = rec.symbol_nondegenerate;
            }
            break;
        case CheckRequest::Type::Adjoint:
        case CheckRequest::Type::Compose:
            if (rec.op_result) {
                j["result"] = operator_json(*rec.op_result);
                j["result_pretty"] = to_text(*rec.op_result);
                j["skew_adjoint"] = rec.result_skew_adjoint;
                j["self_adjoint"] = rec.result_self_adjoint;
            }
            break;
    }
    return j;
}

}  // namespace

std::string render_json(const Report& report) {
    Json j;
    j["schema"] = "jetbracket-report";
    j["schema_version"] = 1;
    j["input"] = report.options.input_name;
    j["seed"] = report.options.seed;
    j["samples"] = report.options.samples;
    j["budget"] = Json{{"point_attempts", report.options.budget.point_attempts},
                       {"v_attempts", report.options.budget.v_attempts},
                       {"alpha_attempts", report.options.budget.alpha_attempts}};
    if (report.has_equation)
        j["equation"] = Json{{"n", report.n}, {"m", report.m}, {"rhs", report.rhs_text}};
    else
        j["equation"] = nullptr;
    Json checks = Json::array();
    for (const CheckRecord& rec : report.checks) checks.push_back(check_json(rec, report.n, report.m));
    j["checks"] = checks;
    if (report.conclusion)
        j["conclusion"] = Json{{"bivectors_hamiltonian", report.conclusion->bivectors_hamiltonian},
                               {"forms_symplectic", report.conclusion->forms_symplectic},
                               {"statements", report.conclusion->statements}};
    else
        j["conclusion"] = nullptr;
    j["exit_code"] = report.exit_code;
    return j.dump(2) + "\n";
}

std::string render_text(const Report& report) {
    std::ostringstream out;
    out << "jetbracket report\n";
    out << "input: " << report.options.input_name << "\n";
    out << "seed: " << report.options.seed << "  samples: " << report.options.samples << "\n";
    if (report.has_equation) {
        out << "equation (n=" << report.n << ", m=" << report.m << "):\n";
        for (std::size_t jcomp = 0; jcomp < report.rhs_text.size(); ++jcomp) {
            std::string lhs = report.m == 1 ? "u" : "u" + std::to_string(jcomp + 1);
            out << "  " << lhs << "_t = " << report.rhs_text[jcomp] << "\n";
        }
    }
    out << "checks:\n";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const CheckRecord& rec = report.checks[i];
        const CheckRequest& req = rec.request;
        out << "  [" << i + 1 << "] " << check_label(req.type);
        switch (req.type) {
            case CheckRequest::Type::Bivector:
            case CheckRequest::Type::TwoForm:
            case CheckRequest::Type::Symbol:
            case CheckRequest::Type::Adjoint:
                out << " " << req.target;
                break;
            case CheckRequest::Type::Compose:
                out << " " << req.target << " " << req.target2;
                break;
            case CheckRequest::Type::Symmetry:
            case CheckRequest::Type::Cosymmetry:
                if (!req.section_display.empty()) {
                    out << " " << req.section_display;
                } else {
                    out << " (";
                    for (std::size_t c = 0; c < req.section.size(); ++c)
                        out << (c ? ", " : "") << to_text(req.section[c], report.n, report.m);
                    out << ")";
                }
                break;
            case CheckRequest::Type::Vanishing:
                out << " k=" << req.k << (req.kind == StructureKind::Vector ? " vector" : " form");
                break;
        }
        out << ": ";
        switch (req.type) {
            case CheckRequest::Type::Bivector:
            case CheckRequest::Type::TwoForm:
                out << (rec.pass ? "PASS" : "FAIL");
                out << " (residual " << (rec.residual_zero ? "= 0" : "!= 0") << ", "
                    << (rec.skew_adjoint ? "skew-adjoint" : "not skew-adjoint") << ")\n";
                if (!rec.residual_zero)
                    out << "        residual = " << to_text(*rec.residual) << "\n";
                break;
            case CheckRequest::Type::Symmetry:
            case CheckRequest::Type::Cosymmetry:
                out << (rec.pass ? "PASS" : "FAIL") << "\n";
                if (!rec.pass) {
                    out << "        residual = (";
                    for (std::size_t c = 0; c < rec.section_residual.size(); ++c)
                        out << (c ? ", " : "") << to_text(rec.section_residual[c], report.n, report.m);
                    out << ")\n";
                }
                break;
            case CheckRequest::Type::Vanishing: {
                int certified = 0;
                for (const CertificateSearchResult& s : rec.samples)
                    certified += s.outcome == SearchOutcome::Certified ? 1 : 0;
                if (rec.pass)
                    out << "CERTIFIED (" << certified << "/" << rec.samples.size() << " samples)\n";
                else if (rec.search_failed)
                    out << "SEARCH FAILED (" << rec.verdict_note << ")\n";
                else
                    out << "REJECTED (" << rec.verdict_note << ")\n";
                for (std::size_t s = 0; s < rec.samples.size(); ++s) {
                    const CertificateSearchResult& sample = rec.samples[s];
                    out << "        sample " << s + 1 << ": ";
                    if (sample.certificate) {
                        const VanishingCertificate& cert = *sample.certificate;
                        out << "rho: " << to_text(cert.rho, report.n, report.m)
                            << "; v = " << to_text(cert.v) << "; alpha = " << to_text(cert.alpha)
                            << "; det lambda(v) = " << to_string(cert.det_lambda_v)
                            << "; system det = " << to_string(cert.system_det) << "; l = " << cert.l
                            << "\n";
                    } else {
                        out << outcome_label(sample.outcome) << " (" << sample.diagnostic << ")\n";
                    }
                }
                break;
            }
            case CheckRequest::Type::Symbol:
                if (rec.symbol) {
                    out << "order " << rec.symbol->degree() << ", "
                        << (rec.symbol_nondegenerate ? "nondegenerate" : "degenerate") << "\n";
                    out << "        at rho: " << to_text(rec.symbol_rho, report.n, report.m) << "\n";
                    for (int r = 0; r < rec.symbol->size(); ++r) {
                        out << "        [";
                        for (int c = 0; c < rec.symbol->size(); ++c)
                            out << (c ? ", " : "") << to_text(rec.symbol->at(r, c));
                        out << "]\n";
                    }
                } else {
                    out << "SEARCH FAILED (" << rec.verdict_note << ")\n";
                }
                break;
            case CheckRequest::Type::Adjoint:
            case CheckRequest::Type::Compose:
                out << to_text(*rec.op_result);
                if (rec.result_skew_adjoint) out << "  [skew-adjoint]";
                if (rec.result_self_adjoint) out << "  [self-adjoint]";
                out << "\n";
                break;
        }
    }
    if (report.conclusion) {
        out << "conclusion:\n";
        if (report.conclusion->statements.empty()) out << "  (withheld)\n";
        for (const std::string& s : report.conclusion->statements) out << "  - " << s << "\n";
    }
    out << "exit code: " << report.exit_code << "\n";
    return out.str();
}

}  // namespace jetbracket
