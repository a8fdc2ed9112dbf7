#include <random>

#include "doctest.h"
#include "iwasawa/lambda_formulas.hpp"
#include "oracles.hpp"

using namespace iwasawa;

TEST_CASE("ferrero formula") {
    for (long d : {3L, 5L, 11L}) CHECK(ferrero_lambda(d).lambda == 0);
    CHECK(ferrero_lambda(7).lambda == 1);
    const auto r21 = ferrero_lambda(21);
    CHECK(r21.lambda == 2);
    CHECK(r21.breakdown == std::vector<std::pair<Integer, Integer>>{{3, 1}, {7, 2}});
    CHECK(ferrero_lambda(31).lambda == 7);
    CHECK(ferrero_lambda(6).lambda == 0);  // 2 | d contributes nothing
    CHECK(r21.assumptions == std::vector<std::string>{"mu = 0"});
    CHECK_THROWS_AS(ferrero_lambda(4), InvalidInput);
    CHECK_THROWS_AS(ferrero_lambda(2), InvalidInput);
    CHECK_THROWS_AS(ferrero_lambda(18), InvalidInput);
}

TEST_CASE("ferrero formula is additive over coprime odd parts") {
    for (long a = 3; a < 60; a += 2)
        for (long b = 3; b < 60; b += 2) {
            if (std::gcd(a, b) != 1 || !oracle::squarefree(a) || !oracle::squarefree(b)) continue;
            CHECK(ferrero_lambda(a * b).lambda + 1 == (ferrero_lambda(a).lambda + 1) + (ferrero_lambda(b).lambda + 1));
        }
}

TEST_CASE("ramified-place count agrees with the ferrero formula") {
    for (long d = 3; d < 500; ++d) {
        if (!oracle::squarefree(d)) continue;
        CAPTURE(d);
        const auto main = main_lambda(d, 2);
        CHECK(main.lambda == ferrero_lambda(d).lambda);
        CHECK(main.method == LambdaMethod::riemann_hurwitz);
        CHECK(consistency_check(d));
    }
}

TEST_CASE("ramified-place count over the odd Fermat bases") {
    // over k * Q_inf the count above q is the Q_inf count times the number of
    // primes of k above q
    for (int p : {3, 5, 17}) {
        for (long d = 3; d < 200; ++d) {
            if (!oracle::squarefree(d) || d % p == 0) continue;
            long expected = -1;
            for (long q = 3; q <= d; q += 2) {
                if (d % q || !is_prime(q)) continue;
                const long q2 = static_cast<long>(ord_p(q * q - 1, 2));
                expected += (1L << (q2 - 3)) * (p / oracle::order_in_degree_p_quotient(q, p));
            }
            CAPTURE(p);
            CAPTURE(d);
            CHECK(main_lambda(d, p).lambda == expected);
            CHECK(main_lambda(d, p).lambda >= ferrero_lambda(d).lambda);
        }
    }
    CHECK_THROWS_AS(main_lambda(21, 7), InvalidInput);
    CHECK_THROWS_AS(main_lambda(15, 5), InvalidInput);
}

TEST_CASE("riemann-hurwitz and kida") {
    CHECK(riemann_hurwitz({2, 0, 1, {2, 2, 2}}) == 2);
    CHECK(riemann_hurwitz({3, 1, 1, {1, 3}}) == 3 - 2 + 2);
    CHECK(riemann_hurwitz({2, 0, 1, {}}) == -1);
    CHECK_THROWS_AS(riemann_hurwitz({2, 0, 1, {3}}), InvalidInput);
    CHECK_THROWS_AS(riemann_hurwitz({4, 0, 1, {}}), InvalidInput);
    CHECK_THROWS_AS(riemann_hurwitz({2, -1, 1, {}}), InvalidInput);
    CHECK(kida_general(1, 0, 2, 3) == 5);
    CHECK(kida_general(0, 1, 0, 0) == -2);
    CHECK_THROWS_AS(kida_general(2, 0, 0, 0), InvalidInput);
    CHECK_THROWS_AS(kida_general(0, 0, -1, 0), InvalidInput);
    CHECK(vanishing_criterion(true, false) == IwasawaInvariants{});
    CHECK_FALSE(vanishing_criterion(false, false).has_value());
    CHECK_FALSE(vanishing_criterion(true, true).has_value());
}

TEST_CASE("decomposition families") {
    const auto fam = decomposition_solve(2, 0, 1, 3);
    CHECK(fam.a_min == 0);
    CHECK(fam.a_max == 0);
    REQUIRE(fam.terms.size() == 1);
    CHECK(fam.terms[0].c == 2);
    CHECK(fam.lambda_L == 2);
    CHECK_THROWS_AS(decomposition_solve(2, 0, 5, 1), InvalidInput);
    CHECK_THROWS_AS(decomposition_solve(6, 0, 1, 1), InvalidInput);

    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
        const int p = (int[]){2, 3, 5, 7}[rng() % 4];
        const long lk = static_cast<long>(rng() % 6), s = static_cast<long>(rng() % 8);
        const long chi = -3 + static_cast<long>(rng() % 8);
        if (std::max(0L, chi - s) > lk) continue;
        const auto f = decomposition_solve(p, lk, chi, s);
        RHInput in{p, lk, chi, std::vector<long>(static_cast<std::size_t>(s), p)};
        CHECK(f.lambda_L == riemann_hurwitz(in));
        for (const auto& term : f.terms) {
            CHECK(term.a >= 0);
            CHECK(term.b >= 0);
            CHECK(term.c >= 0);
            CHECK(term.a + term.b == lk);  // rank of the G-invariants
            CHECK(term.c - term.a == s - chi);
        }
    }
}

TEST_CASE("growth fitting") {
    const auto f = fit_growth(2, {1, 2, 4, 8, 16});
    CHECK(f.lambda == 0);
    CHECK(f.mu == 1);
    CHECK(f.nu == 0);
    CHECK(f.n0 == 0);
    const auto g = fit_growth(2, {5, 0, 1, 2, 3});
    CHECK(g.lambda == 1);
    CHECK(g.mu == 0);
    CHECK(g.nu == -1);
    CHECK(g.n0 == 1);
    CHECK_THROWS_AS(fit_growth(2, {5, 1, 1, 2, 3}), NotStabilized);
    CHECK_THROWS_AS(fit_growth(2, {1, 2, 3}), InvalidInput);
    CHECK_THROWS_AS(fit_growth(2, {1, -2, 3, 4}), InvalidInput);
    CHECK_THROWS_AS(fit_growth(4, {1, 2, 3, 4}), InvalidInput);
    CHECK_THROWS_AS(fit_growth(2, {4, 3, 2, 1}), NotStabilized);
    CHECK(fit_growth(3, {0, 0, 0, 0}).lambda == 0);
}

TEST_CASE("fitting recovers planted parameters") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 300; ++t) {
        const int p = (int[]){2, 3, 5}[rng() % 3];
        const long lambda = static_cast<long>(rng() % 6), mu = static_cast<long>(rng() % 3);
        const std::size_t n0 = rng() % 4, len = n0 + 4 + rng() % 4;
        long nu = -5 + static_cast<long>(rng() % 15);
        Integer pn0;
        mpz_ui_pow_ui(pn0.get_mpz_t(), p, n0);
        if (lambda * static_cast<long>(n0) + mu * pn0 + nu < 0) nu = -(lambda * static_cast<long>(n0)) - pn0.get_si() * mu;
        std::vector<Integer> e(len);
        Integer pk = 1;
        for (std::size_t n = 0; n < len; ++n, pk *= p) e[n] = lambda * static_cast<long>(n) + mu * pk + nu;
        for (std::size_t n = 0; n < n0; ++n) {
            // noisy head, with the point just before the tail off the curve
            const Integer on_curve = e[n];
            e[n] = static_cast<long>(rng() % 40);
            if (n + 1 == n0 && e[n] == on_curve) e[n] += 1;
        }
        CAPTURE(p);
        CAPTURE(lambda);
        CAPTURE(mu);
        CAPTURE(nu);
        CAPTURE(n0);
        const auto fit = fit_growth(p, e);
        CHECK(fit.lambda == lambda);
        CHECK(fit.mu == mu);
        CHECK(fit.nu == nu);
        CHECK(fit.n0 == n0);
        CHECK(fit.source == e);
    }
}
