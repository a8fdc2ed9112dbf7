#include <random>
#include <set>

#include "doctest.h"
#include "iwasawa/exact_arith.hpp"
#include "iwasawa/int_matrix.hpp"
#include "oracles.hpp"

using namespace iwasawa;

TEST_CASE("ord_p") {
    CHECK(ord_p(48, 2) == 4);
    CHECK(ord_p(8, 2) == 3);
    CHECK(ord_p(7, 2) == 0);
    CHECK(ord_p(-48, 2) == 4);
    CHECK(ord_p(Integer("1" + std::string(40, '0')), 5) == 40);
    CHECK_THROWS_AS(ord_p(0, 2), InvalidInput);
    CHECK_THROWS_AS(ord_p(12, 4), InvalidInput);
    CHECK(ord_p(48, 2) == oracle::repeated_division(48, 2));
}

TEST_CASE("ord_p is additive on products") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(1, 1'000'000);
    for (int i = 0; i < 300; ++i) {
        const long a = dist(rng) * (i % 2 ? -1 : 1), b = dist(rng);
        for (long p : {2L, 3L, 5L, 7L}) {
            CHECK(ord_p(Integer(a) * b, p) == ord_p(a, p) + ord_p(b, p));
            CHECK(ord_p(a, p) == oracle::repeated_division(a, p));
        }
    }
}

TEST_CASE("multiplicative_order") {
    CHECK(multiplicative_order(2, 9) == 6);
    CHECK(multiplicative_order(2, 25) == 20);
    CHECK(multiplicative_order(1, 17) == 1);
    CHECK(multiplicative_order(-1, 17) == 2);
    CHECK_THROWS_AS(multiplicative_order(6, 9), InvalidInput);
    CHECK_THROWS_AS(multiplicative_order(1, 1), InvalidInput);
    for (long m = 2; m < 200; ++m)
        for (long a = 1; a < m; ++a)
            if (std::gcd(a, m) == 1) REQUIRE(multiplicative_order(a, m) == oracle::direct_order(a, m));
}

TEST_CASE("primality and factoring") {
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(65537));
    CHECK_FALSE(is_prime(Integer(65537) * 65539));
    CHECK(is_prime(Integer("18446744073709551557")));     // largest 64-bit prime
    CHECK(is_prime(Integer("340282366920938463463374607431768211297")));  // 2^128 - 159
    CHECK_FALSE(is_prime(Integer("3825123056546413051")));  // strong pseudoprime to bases 2..23
    for (long n = 2; n < 5000; ++n) {
        bool trial = true;
        for (long k = 2; k * k <= n; ++k)
            if (n % k == 0) trial = false;
        REQUIRE(is_prime(n) == trial);
    }
    const auto f = factor(Integer(2 * 2 * 3 * 101 * 101 * 65537L));
    REQUIRE(f.size() == 4);
    CHECK(f[0] == std::pair<Integer, unsigned>(2, 2));
    CHECK(f[3] == std::pair<Integer, unsigned>(65537, 1));
    CHECK(is_squarefree(105));
    CHECK_FALSE(is_squarefree(12));
    CHECK(euler_phi(36) == 12);
}

TEST_CASE("unit_group_structure") {
    CHECK(unit_group_structure(8) == std::vector<UnitGenerator>{{7, 2}, {5, 2}});
    CHECK(unit_group_structure(5) == std::vector<UnitGenerator>{{2, 4}});
    CHECK(unit_group_structure(2).empty());
    CHECK(unit_group_structure(4) == std::vector<UnitGenerator>{{3, 2}});

    // (Z/8)^x = {1, 3, 5, 7}: every element is (-1)^a 5^b
    std::set<long> reached;
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b) reached.insert(((a ? 7 : 1) * (b ? 5 : 1)) % 8);
    CHECK(reached == std::set<long>{1, 3, 5, 7});

    for (std::int64_t m = 2; m < 400; ++m) {
        const auto gens = unit_group_structure(m);
        long product = 1;
        for (const auto& g : gens) {
            CHECK(std::gcd(g.generator, m) == 1);
            CHECK(oracle::direct_order(g.generator, m) == g.order);
            CHECK(multiplicative_order(g.generator, m) == g.order);
            product *= g.order;
        }
        CHECK(product == oracle::count_units(m));
        // orders of arbitrary units divide the group order
        for (long a = 1; a < m; a += 7)
            if (std::gcd(a, m) == 1) CHECK(product % multiplicative_order(a, m).get_si() == 0);
    }
}

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

void check_smith(const IntMatrix& a) {
    const SmithForm s = smith_normal_form(a);
    REQUIRE(s.U * a * s.V == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j) REQUIRE(s.D(i, j) == 0);
    const auto d = s.nonzero_diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        CHECK(d[i] > 0);
        CHECK(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
    }
    if (a.rows() == a.cols()) {
        Integer prod = 1;
        for (std::size_t i = 0; i < a.rows(); ++i) prod *= s.D(i, i);
        CHECK(prod == abs(determinant(a)));
    }
}

}  // namespace

TEST_CASE("smith_normal_form examples") {
    const SmithForm s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(s.D == IntMatrix{{1, 0}, {0, 6}});
    CHECK(smith_normal_form(IntMatrix(3, 2)).D == IntMatrix(3, 2));
    CHECK(smith_normal_form(IntMatrix::identity(4)).D == IntMatrix::identity(4));
    check_smith(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).nonzero_diagonal() ==
          std::vector<Integer>{2, 6, 12});
}

TEST_CASE("smith_normal_form on random matrices") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 200; ++t) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        check_smith(random_matrix(rng, r, c, 9));
    }
}

TEST_CASE("smith_normal_form is deterministic") {
    std::mt19937_64 rng(5);
    const IntMatrix a = random_matrix(rng, 4, 5, 20);
    const SmithForm s1 = smith_normal_form(a), s2 = smith_normal_form(a);
    CHECK(s1.U == s2.U);
    CHECK(s1.V == s2.V);
    CHECK(s1.D == s2.D);
}

TEST_CASE("lattice helpers") {
    const IntMatrix k = integer_kernel(IntMatrix{{1, 2, 3}});
    CHECK(k.cols() == 2);
    CHECK((IntMatrix{{1, 2, 3}} * k).is_zero());
    CHECK(lattice_contains(IntMatrix{{2, 0}, {0, 3}}, {4, 9}));
    CHECK_FALSE(lattice_contains(IntMatrix{{2, 0}, {0, 3}}, {1, 3}));
    const auto q = lattice_quotient(IntMatrix::identity(2), IntMatrix{{2, 0}, {0, 3}});
    CHECK(q.torsion == std::vector<Integer>{6});
    CHECK(q.free_rank == 0);
    const auto z = lattice_quotient(IntMatrix::identity(2), IntMatrix{{4}, {0}});
    CHECK(z.torsion == std::vector<Integer>{4});
    CHECK(z.free_rank == 1);
    CHECK_THROWS_AS(lattice_quotient(IntMatrix{{2}}, IntMatrix{{1}}), VerificationFailure);
    const IntMatrix u{{2, 1}, {7, 4}};
    CHECK(u * unimodular_inverse(u) == IntMatrix::identity(2));
    CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), InvalidInput);
}
