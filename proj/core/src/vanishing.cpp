#include "jetbracket/vanishing.hpp"

#include <algorithm>

#include "jetbracket/errors.hpp"

namespace jetbracket {

namespace {

/// Flat index of the tuple (first, rest...) in base m.
std::size_t encode(int m, int first, const std::vector<int>& rest) {
    std::size_t idx = first;
    for (int c : rest) idx = idx * m + c;
    return idx;
}

bool advance_tuple(std::vector<int>& tuple, int m) {
    for (int p = static_cast<int>(tuple.size()) - 1; p >= 0; --p) {
        if (++tuple[p] < m) return true;
        tuple[p] = 0;
    }
    return false;
}

}  // namespace

QMatrix build_symbol_system(const SymbolMatrix& lambda, int k,
                            const std::vector<std::vector<Rational>>& thetas) {
    if (k < 2) throw Error("build_symbol_system: k must be at least 2");
    if (static_cast<int>(thetas.size()) != k - 1)
        throw Error("build_symbol_system: expected k-1 covectors");
    const int n = lambda.theta_dims();
    const int m = lambda.size();
    for (const auto& theta : thetas)
        if (static_cast<int>(theta.size()) != n) throw Error("build_symbol_system: covector size mismatch");

    std::vector<Rational> theta_sum(n, 0);
    for (const auto& theta : thetas)
        for (int d = 0; d < n; ++d) theta_sum[d] += theta[d];

    QMatrix lambda_sum = lambda.eval(theta_sum);
    std::vector<QMatrix> lambda_p;
    lambda_p.reserve(k - 1);
    for (const auto& theta : thetas) lambda_p.push_back(lambda.eval(theta));

    const Rational sign = (lambda.degree() % 2 == 0) ? 1 : -1;

    std::size_t size = 1;
    for (int p = 0; p < k; ++p) size *= m;
    QMatrix system(size, std::vector<Rational>(size, 0));

    std::vector<int> slots(k - 1, 0);
    do {
        for (int i = 0; i < m; ++i) {
            const std::size_t row = encode(m, i, slots);
            // lambda^i_j(theta^1+..+theta^{k-1}) a^j_{slots}
            for (int j = 0; j < m; ++j) system[row][encode(m, j, slots)] += lambda_sum[i][j];
            // (-1)^l a^i_{.. j at slot p ..} lambda^{slots[p]}_j(theta^p)
            for (int p = 0; p < k - 1; ++p) {
                std::vector<int> jslots = slots;
                for (int j = 0; j < m; ++j) {
                    jslots[p] = j;
                    system[row][encode(m, i, jslots)] += sign * lambda_p[p][slots[p]][j];
                }
            }
        }
    } while (advance_tuple(slots, m));
    return system;
}

std::vector<std::vector<Rational>> alpha_heuristic(int l, int k, int budget) {
    if (l < 2 || k < 3) return {};
    static const long nums[] = {1, 2, 3, 1, 4, 3, 5, 5, 6, 7, 7, 8};
    static const long dens[] = {1, 1, 1, 2, 1, 2, 1, 2, 1, 2, 1, 1};
    const int pool_size = 12;
    std::vector<Rational> pool;
    for (int i = 0; i < pool_size; ++i) pool.push_back(rational(nums[i], dens[i]));

    auto probe = [l](const std::vector<Rational>& alpha) {
        Rational sum = 0;
        Rational powers = 0;
        for (const Rational& a : alpha) {
            sum += a;
            powers += pow_rational(a, static_cast<unsigned>(l));
        }
        Rational value = pow_rational(sum, static_cast<unsigned>(l));
        value += (l % 2 == 0) ? powers : -powers;
        return value != 0;
    };

    std::vector<std::vector<Rational>> out;
    std::vector<Rational> ones(k - 1, Rational(1));
    if (probe(ones)) out.push_back(ones);

    // Strictly increasing index combinations from the pool: distinct values,
    // deterministic order.
    std::vector<int> idx(k - 1);
    for (int p = 0; p < k - 1; ++p) idx[p] = p;
    if (k - 1 <= pool_size) {
        while (static_cast<int>(out.size()) < budget) {
            std::vector<Rational> alpha;
            for (int i : idx) alpha.push_back(pool[i]);
            if (probe(alpha)) out.push_back(alpha);
            int p = k - 2;
            while (p >= 0 && idx[p] == pool_size - (k - 1 - p)) --p;
            if (p < 0) break;
            ++idx[p];
            for (int q = p + 1; q < k - 1; ++q) idx[q] = idx[q - 1] + 1;
        }
    }
    if (static_cast<int>(out.size()) > budget) out.resize(budget);
    return out;
}

namespace {

std::vector<Rational> make_v_candidate(int attempt, int n, Rng& rng) {
    if (attempt == 0) return std::vector<Rational>(n, Rational(1));
    if (attempt <= n) {
        std::vector<Rational> v(n, 0);
        v[attempt - 1] = 1;
        return v;
    }
    if (attempt == n + 1) {
        std::vector<Rational> v(n);
        for (int d = 0; d < n; ++d) v[d] = d + 1;
        return v;
    }
    std::vector<Rational> v(n);
    for (int d = 0; d < n; ++d) v[d] = rng.small_rational();
    return v;
}

}  // namespace

CertificateSearchResult search_certificate(const EvolutionEquation& eq, int k, StructureKind kind,
                                           const SearchBudget& budget, std::uint64_t seed,
                                           bool zero_point_first) {
    if (k < 3) throw Error("search_certificate: the vanishing theorem needs k >= 3");
    CertificateSearchResult res;
    Rng rng(seed);

    RegularPointResult rp = find_regular_point(eq, budget.point_attempts, rng, zero_point_first);

    const int l = eq.linearization().order();
    if (l <= 1) {
        res.outcome = SearchOutcome::OrderTooLow;
        res.diagnostic = "hypothesis violated: order <= 1 (linearization has order " +
                         std::to_string(std::max(l, 0)) + ", needs >= 2)";
        return res;
    }
    if (!rp.rho) {
        res.outcome = SearchOutcome::NoRegularPoint;
        res.diagnostic = rp.diagnostic;
        return res;
    }

    // Vector structures see l_f; forms see l_f^*. Nondegeneracy transfers
    // between the two (transpose up to sign), but the form symbol is computed
    // directly rather than assumed.
    SymbolMatrix lambda = (kind == StructureKind::Vector)
                              ? *rp.lambda
                              : principal_symbol(eq.adjoint_linearization(), *rp.rho);
    if (!is_nondegenerate(lambda))
        throw Error("internal: adjoint symbol degenerate at a point regular for l_f");

    const std::vector<std::vector<Rational>> alphas = alpha_heuristic(l, k, budget.alpha_attempts);
    for (int vi = 0; vi < budget.v_attempts; ++vi) {
        std::vector<Rational> v = make_v_candidate(vi, eq.base_dims(), rng);
        Rational det_lambda_v = gauss_determinant(lambda.eval(v));
        if (det_lambda_v == 0) continue;
        for (const std::vector<Rational>& alpha : alphas) {
            std::vector<std::vector<Rational>> thetas;
            thetas.reserve(k - 1);
            for (const Rational& a : alpha) {
                std::vector<Rational> theta = v;
                for (Rational& c : theta) c *= a;
                thetas.push_back(std::move(theta));
            }
            Rational system_det = gauss_determinant(build_symbol_system(lambda, k, thetas));
            if (system_det == 0) continue;

            VanishingCertificate cert;
            cert.k = k;
            cert.kind = kind;
            cert.rho = *rp.rho;
            cert.v = v;
            cert.alpha = alpha;
            cert.det_lambda_v = det_lambda_v;
            cert.system_det = system_det;
            cert.l = l;
            cert.seed = seed;
            if (!verify_certificate(eq, cert))
                throw Error("internal: certificate failed independent re-verification");
            res.outcome = SearchOutcome::Certified;
            res.certificate = std::move(cert);
            return res;
        }
    }
    res.outcome = SearchOutcome::BudgetExhausted;
    res.diagnostic = "no (v, alpha) pair with nonzero system determinant within budget";
    return res;
}

std::vector<CertificateSearchResult> certify_samples(const EvolutionEquation& eq, int k,
                                                     StructureKind kind, int samples,
                                                     const SearchBudget& budget, std::uint64_t seed) {
    std::vector<CertificateSearchResult> out;
    out.reserve(samples);
    for (int s = 0; s < samples; ++s)
        out.push_back(search_certificate(eq, k, kind, budget, seed + s, s == 0));
    return out;
}

bool verify_certificate(const EvolutionEquation& eq, const VanishingCertificate& cert) {
    const CDiffOperator& op =
        cert.kind == StructureKind::Vector ? eq.linearization() : eq.adjoint_linearization();
    if (op.order() != cert.l || cert.l < 2) return false;
    for (const Rational& a : cert.alpha)
        if (a == 0) return false;
    SymbolMatrix lambda = principal_symbol(op, cert.rho);
    Rational det_lambda_v = bareiss_determinant(lambda.eval(cert.v));
    if (det_lambda_v == 0 || det_lambda_v != cert.det_lambda_v) return false;
    std::vector<std::vector<Rational>> thetas;
    for (const Rational& a : cert.alpha) {
        std::vector<Rational> theta = cert.v;
        for (Rational& c : theta) c *= a;
        thetas.push_back(std::move(theta));
    }
    Rational system_det = bareiss_determinant(build_symbol_system(lambda, cert.k, thetas));
    return system_det != 0 && system_det == cert.system_det;
}

namespace {

bool all_certified(const std::vector<CertificateSearchResult>& results) {
    return !results.empty() &&
           std::all_of(results.begin(), results.end(), [](const CertificateSearchResult& r) {
               return r.outcome == SearchOutcome::Certified;
           });
}

std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0) out += ", ";
        out += names[i];
    }
    return out;
}

}  // namespace

Conclusion conclude(const EvolutionEquation&, const std::vector<CertificateSearchResult>& vector_certs,
                    const std::vector<CertificateSearchResult>& form_certs,
                    const std::vector<std::string>& verified_bivectors,
                    const std::vector<std::string>& verified_twoforms) {
    Conclusion c;
    c.bivectors_hamiltonian = all_certified(vector_certs);
    c.forms_symplectic = all_certified(form_certs);

    if (c.bivectors_hamiltonian) {
        c.statements.push_back(
            "every invariant variational bivector on this equation is Hamiltonian: its Schouten "
            "square is an invariant 3-vector, and the k = 3 certificates force 3-vectors to vanish "
            "at all sampled regular points (density extends this across the equation)");
        c.statements.push_back(
            "any two such bivectors are automatically compatible (their bracket is again a 3-vector)");
        if (verified_bivectors.size() >= 2)
            c.statements.push_back("verified bivectors " + join_names(verified_bivectors) +
                                   " form a Hamiltonian pair, automatically compatible");
        else if (verified_bivectors.size() == 1)
            c.statements.push_back("verified bivector " + join_names(verified_bivectors) +
                                   " is Hamiltonian");
    } else if (!vector_certs.empty()) {
        std::string why;
        for (const auto& r : vector_certs)
            if (r.outcome != SearchOutcome::Certified) {
                why = r.diagnostic;
                break;
            }
        c.statements.push_back("bivector conclusion withheld: " + why);
    }

    if (c.forms_symplectic) {
        c.statements.push_back(
            "every invariant variational 2-form on this equation is symplectic: its differential is "
            "an invariant 3-form, forced to vanish by the k = 3 certificates");
        if (!verified_twoforms.empty())
            c.statements.push_back("verified symplectic 2-forms: " + join_names(verified_twoforms));
    } else if (!form_certs.empty()) {
        std::string why;
        for (const auto& r : form_certs)
            if (r.outcome != SearchOutcome::Certified) {
                why = r.diagnostic;
                break;
            }
        c.statements.push_back("2-form conclusion withheld: " + why);
    }

    if (c.bivectors_hamiltonian || c.forms_symplectic)
        c.statements.push_back(
            "the certificates never use skew-symmetry, so the same vanishing holds for symmetric "
            "operators: this equation can only carry linear Hamiltonian or symplectic structures");
    return c;
}

}  // namespace jetbracket
