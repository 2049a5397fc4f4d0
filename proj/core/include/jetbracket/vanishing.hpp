#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetbracket/exact_linalg.hpp"
#include "jetbracket/symbols.hpp"

namespace jetbracket {

/// Machine-checkable witness that the symbol system forces every invariant
/// k-structure of the given kind to vanish at rho: a covector direction v with
/// det lambda(v) != 0 and scalars alpha making the m^k x m^k system determinant
/// nonzero, everything exact.
struct VanishingCertificate {
    int k = 0;
    StructureKind kind = StructureKind::Vector;
    PointAssignment rho;
    std::vector<Rational> v;
    std::vector<Rational> alpha;  ///< k-1 nonzero scalars; theta^p = alpha_p * v
    Rational det_lambda_v;
    Rational system_det;
    int l = 0;  ///< operator order, >= 2
    std::uint64_t seed = 0;
};

/// Coefficient matrix of the linear system in the m^k unknowns
/// a^j_{i_1..i_{k-1}}, rows indexed by (i, i_1..i_{k-1}):
///   sum_j lambda^i_j(theta^1+..+theta^{k-1}) a^j_{i_1..i_{k-1}}
///   + (-1)^l sum_p sum_j a^i_{..j at slot p..} lambda^{i_p}_j(theta^p),
/// evaluated exactly at the given covectors.
QMatrix build_symbol_system(const SymbolMatrix& lambda, int k,
                            const std::vector<std::vector<Rational>>& thetas);

/// Candidate alpha tuples for the certificate search, (1,..,1) first, then
/// small distinct rationals, prefiltered by the scalar probe
/// (sum alpha)^l + (-1)^l sum alpha_p^l != 0. Ordering heuristic only; validity
/// is always decided by the exact system determinant.
std::vector<std::vector<Rational>> alpha_heuristic(int l, int k, int budget);

enum class SearchOutcome {
    Certified,
    OrderTooLow,        ///< hypothesis violated: ord l_f <= 1 (exact, definitive)
    NoRegularPoint,     ///< sampling found no point with full order + nondegenerate symbol
    BudgetExhausted,    ///< regular point found but no (v, alpha) within budget
};

struct CertificateSearchResult {
    SearchOutcome outcome = SearchOutcome::BudgetExhausted;
    std::optional<VanishingCertificate> certificate;
    std::string diagnostic;
};

struct SearchBudget {
    int point_attempts = 200;
    int v_attempts = 200;
    int alpha_attempts = 50;
};

/// Runs the constructive pipeline at one sampled point: regular point ->
/// order check -> symbol of l_f (Vector) or l_f^* (Form) -> covector v with
/// det lambda(v) != 0 -> alpha with nonzero exact system determinant. Every
/// emitted certificate is re-verified on the independent fraction-free route
/// before being returned.
CertificateSearchResult search_certificate(const EvolutionEquation& eq, int k, StructureKind kind,
                                           const SearchBudget& budget, std::uint64_t seed,
                                           bool zero_point_first = true);

/// N independent samples (distinct sub-seeds; the first one tries the all-zero
/// point). The vanishing claim is reported for the sampled points; density of
/// regular points extends it to the whole equation.
std::vector<CertificateSearchResult> certify_samples(const EvolutionEquation& eq, int k,
                                                     StructureKind kind, int samples,
                                                     const SearchBudget& budget, std::uint64_t seed);

/// Recomputes both determinants of an emitted certificate from scratch via
/// fraction-free elimination. Returns false if either vanishes or differs.
bool verify_certificate(const EvolutionEquation& eq, const VanishingCertificate& cert);

/// Structural consequences once k = 3 certificates exist: every verified
/// bivector is Hamiltonian and any two are compatible (their bracket is a
/// 3-vector, and 3-vectors vanish); every verified 2-form is symplectic (its
/// differential is a 3-form); only linear structures can exist at all.
struct Conclusion {
    bool bivectors_hamiltonian = false;
    bool forms_symplectic = false;
    std::vector<std::string> statements;
};

Conclusion conclude(const EvolutionEquation& eq,
                    const std::vector<CertificateSearchResult>& vector_certs,
                    const std::vector<CertificateSearchResult>& form_certs,
                    const std::vector<std::string>& verified_bivectors,
                    const std::vector<std::string>& verified_twoforms);

}  // namespace jetbracket
