#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iwasawa/exact_arith.hpp"
#include "iwasawa/splitting.hpp"

namespace iwasawa {

enum class LambdaMethod { ferrero_formula, riemann_hurwitz, oracle };
std::string to_string(LambdaMethod method);

struct LambdaResult {
    Integer d;
    TowerBase base;
    long lambda = 0;
    /// (odd prime q | d, its contribution to the sum)
    std::vector<std::pair<Integer, Integer>> breakdown;
    LambdaMethod method = LambdaMethod::ferrero_formula;
    std::vector<std::string> assumptions;
};

/// chi(G, P_L) for L = K(sqrt(-d)) over the Z_2-tower K of a Fermat base with
/// odd class number: |H^1| = 1, |H^2| = 2. Not computable at finite level
/// here; used as a known constant.
inline constexpr long kPrincipalIdealChi = 1;

/// -1 + sum over odd q | d of 2^{ord_2(q^2 - 1) - 3}.
LambdaResult ferrero_lambda(const Integer& d);

/// lambda_2(k(sqrt(-d))) = -1 + |S|, obtained by feeding |S| from the
/// splitting module, lambda_K = 0 (vanishing criterion) and
/// chi(G, P_L) = 1 through the Riemann-Hurwitz relation.
LambdaResult main_lambda(const Integer& d, int p);

/// delta - tau - 1 + dim_F2 A*/A*^2 + s_n
long kida_general(int delta, int tau, long dim2_narrow, long s_n);

struct RHInput {
    int p = 2;
    long lambda_K = 0;
    long chi_P = 0;
    std::vector<long> ram;  // e(w) for the finite places w not above p; each 1 or p
};

/// p lambda_K - (p - 1) chi_P + sum (e(w) - 1). Assumes mu_K = 0.
long riemann_hurwitz(const RHInput& in);

struct IwasawaInvariants {
    long lambda = 0, mu = 0, nu = 0;
    friend bool operator==(const IwasawaInvariants&, const IwasawaInvariants&) = default;
};

/// (0, 0, 0) when p has a single prime above it in the base and p does not
/// divide its class number; no conclusion otherwise.
std::optional<IwasawaInvariants> vanishing_criterion(bool one_prime_above_p, bool p_divides_class_number);

struct DecompositionTerm {
    long a = 0;  // copies of Z_p
    long b = 0;  // copies of Z_p[G]
    long c = 0;  // copies of the augmentation ideal
};

struct DecompositionFamily {
    int p = 2;
    long lambda_K = 0, chi_P = 0, s = 0;
    long a_min = 0, a_max = 0;
    std::vector<DecompositionTerm> terms;  // one per a in [a_min, a_max]
    long lambda_L = 0;                     // a + p b + (p - 1) c, the same for every term
};

/// All Z_p[G]-lattice shapes Z_p^a + Z_p[G]^b + I^c compatible with the given
/// lambda_K, chi(G, P_L) and number s of ramified places.
DecompositionFamily decomposition_solve(int p, long lambda_K, long chi_P, long s);

struct IwasawaFit {
    int p = 2;
    Integer lambda, mu, nu;
    std::size_t n0 = 0;
    std::vector<Integer> source;
};

/// Smallest n0 such that e_n = lambda n + mu p^n + nu for every n >= n0, with
/// at least four points in the fitted tail and lambda, mu >= 0.
/// Throws InvalidInput for short input, NotStabilized when nothing fits.
IwasawaFit fit_growth(int p, const std::vector<Integer>& e);

/// ferrero_lambda(d) == main_lambda(d, 2)
bool consistency_check(const Integer& d);

}  // namespace iwasawa
