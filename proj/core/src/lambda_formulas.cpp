#include "iwasawa/lambda_formulas.hpp"

namespace iwasawa {

namespace {

void require_valid_d(const Integer& d) {
    if (d <= 2) throw InvalidInput("d must be > 2, got " + d.get_str());
    if (!is_squarefree(d)) throw InvalidInput("d = " + d.get_str() + " is not squarefree");
}

}  // namespace

std::string to_string(LambdaMethod method) {
    switch (method) {
        case LambdaMethod::ferrero_formula: return "ferrero_formula";
        case LambdaMethod::riemann_hurwitz: return "riemann_hurwitz";
        case LambdaMethod::oracle: return "oracle";
    }
    return "?";
}

LambdaResult ferrero_lambda(const Integer& d) {
    require_valid_d(d);
    LambdaResult r;
    r.d = d;
    r.base = TowerBase::rationals();
    r.method = LambdaMethod::ferrero_formula;
    r.assumptions = {"mu = 0"};
    Integer sum = 0;
    for (const auto& [q, e] : factor(d)) {
        if (q == 2) continue;
        Integer c = primes_above_in_Qinf(q);
        sum += c;
        r.breakdown.emplace_back(q, std::move(c));
    }
    r.lambda = to_int64(sum - 1);
    return r;
}

LambdaResult main_lambda(const Integer& d, int p) {
    require_valid_d(d);
    const RamifiedSet S = ramified_set(d, p);

    // lambda_K = 0: 2 has one prime above it in k and h_k is odd for the supported p
    const auto base_invariants = vanishing_criterion(two_inert_in_k(p), /*p_divides_class_number=*/false);
    if (!base_invariants) throw VerificationFailure("vanishing criterion failed for the Fermat base");
    const long lambda_K = base_invariants->lambda;
    const long s = to_int64(S.total);

    RHInput rh;
    rh.p = 2;
    rh.lambda_K = lambda_K;
    rh.chi_P = kPrincipalIdealChi;
    rh.ram.assign(static_cast<std::size_t>(s), 2);
    const long lambda = riemann_hurwitz(rh);
    if (decomposition_solve(2, lambda_K, kPrincipalIdealChi, s).lambda_L != lambda)
        throw VerificationFailure("decomposition and Riemann-Hurwitz disagree");

    LambdaResult r;
    r.d = d;
    r.base = S.base;
    r.lambda = lambda;
    r.breakdown = S.entries;
    r.method = LambdaMethod::riemann_hurwitz;
    r.assumptions = {"mu = 0", "class number of the base field k is odd (p in {2, 3, 5, 17, 257})",
                     "chi(G, P_L) = 1 (|H^1(G, P_L)| = 1, |H^2(G, P_L)| = 2)"};
    return r;
}

long kida_general(int delta, int tau, long dim2_narrow, long s_n) {
    if ((delta != 0 && delta != 1) || (tau != 0 && tau != 1)) throw InvalidInput("delta and tau must be 0 or 1");
    if (dim2_narrow < 0 || s_n < 0) throw InvalidInput("dim2 and s_n must be nonnegative");
    return delta - tau - 1 + dim2_narrow + s_n;
}

long riemann_hurwitz(const RHInput& in) {
    if (!is_prime(in.p)) throw InvalidInput("riemann_hurwitz: p = " + std::to_string(in.p) + " is not prime");
    if (in.lambda_K < 0) throw InvalidInput("riemann_hurwitz: lambda_K must be nonnegative");
    long sum = 0;
    for (long e : in.ram) {
        if (e != 1 && e != in.p)
            throw InvalidInput("ramification index " + std::to_string(e) + " impossible in a degree-" +
                               std::to_string(in.p) + " extension");
        sum += e - 1;
    }
    return in.p * in.lambda_K - (in.p - 1) * in.chi_P + sum;
}

std::optional<IwasawaInvariants> vanishing_criterion(bool one_prime_above_p, bool p_divides_class_number) {
    if (one_prime_above_p && !p_divides_class_number) return IwasawaInvariants{};
    return std::nullopt;
}

DecompositionFamily decomposition_solve(int p, long lambda_K, long chi_P, long s) {
    if (!is_prime(p)) throw InvalidInput("decomposition_solve: p = " + std::to_string(p) + " is not prime");
    if (lambda_K < 0 || s < 0) throw InvalidInput("decomposition_solve: lambda_K and s must be nonnegative");
    DecompositionFamily fam;
    fam.p = p;
    fam.lambda_K = lambda_K;
    fam.chi_P = chi_P;
    fam.s = s;
    fam.a_min = std::max(0L, chi_P - s);
    fam.a_max = lambda_K;
    if (fam.a_min > fam.a_max)
        throw InvalidInput("no decomposition: need max(0, chi_P - s) <= lambda_K, got " + std::to_string(fam.a_min) +
                           " > " + std::to_string(fam.a_max));
    for (long a = fam.a_min; a <= fam.a_max; ++a) {
        const DecompositionTerm t{a, lambda_K - a, s - chi_P + a};
        const long lambda_L = t.a + p * t.b + (p - 1) * t.c;
        if (a == fam.a_min)
            fam.lambda_L = lambda_L;
        else if (lambda_L != fam.lambda_L)
            throw VerificationFailure("decomposition family has a-dependent lambda_L");
        fam.terms.push_back(t);
    }
    return fam;
}

IwasawaFit fit_growth(int p, const std::vector<Integer>& e) {
    if (!is_prime(p)) throw InvalidInput("fit_growth: p = " + std::to_string(p) + " is not prime");
    if (e.size() < 4) throw InvalidInput("fit_growth needs at least 4 values, got " + std::to_string(e.size()));
    for (const auto& v : e)
        if (v < 0) throw InvalidInput("fit_growth: exponents must be nonnegative");

    const Integer pm1 = p - 1;
    for (std::size_t n0 = 0; n0 + 4 <= e.size(); ++n0) {
        Integer pn;
        mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(p), n0);
        // first differences: e_{n+1} - e_n = lambda + mu (p - 1) p^n
        const Integer d0 = e[n0 + 1] - e[n0], d1 = e[n0 + 2] - e[n0 + 1];
        const Integer scale = pm1 * pm1 * pn;
        if (!mpz_divisible_p(Integer(d1 - d0).get_mpz_t(), scale.get_mpz_t())) continue;
        const Integer mu = (d1 - d0) / scale;
        const Integer lambda = d0 - mu * pm1 * pn;
        if (mu < 0 || lambda < 0) continue;
        const Integer nu = e[n0] - lambda * static_cast<unsigned long>(n0) - mu * pn;

        bool fits = true;
        Integer pk = pn;
        for (std::size_t n = n0; n < e.size() && fits; ++n) {
            fits = (e[n] == lambda * static_cast<unsigned long>(n) + mu * pk + nu);
            pk *= p;
        }
        if (fits) return IwasawaFit{p, lambda, mu, nu, n0, e};
    }
    throw NotStabilized("fit_growth: no tail of at least 4 values fits lambda n + mu p^n + nu");
}

bool consistency_check(const Integer& d) { return ferrero_lambda(d).lambda == main_lambda(d, 2).lambda; }

}  // namespace iwasawa
