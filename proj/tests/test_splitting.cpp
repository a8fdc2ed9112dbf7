#include "doctest.h"
#include "iwasawa/splitting.hpp"
#include "oracles.hpp"

using namespace iwasawa;

namespace {

std::vector<long> odd_primes_below(long bound) {
    std::vector<long> out;
    for (long q = 3; q < bound; q += 2) {
        bool prime = true;
        for (long k = 3; k * k <= q; k += 2)
            if (q % k == 0) prime = false;
        if (prime) out.push_back(q);
    }
    return out;
}

}  // namespace

TEST_CASE("splitting in Q_n") {
    CHECK(residue_degree_in_Qn(7, 0) == 1);
    CHECK(primes_above_in_Qn(7, 1) == 2);
    CHECK(primes_above_in_Qn(3, 1) == 1);
    CHECK(primes_above_in_Qinf(7) == 2);
    CHECK(primes_above_in_Qinf(17) == 4);
    CHECK(primes_above_in_Qinf(3) == 1);
    CHECK(primes_above_in_Qinf(31) == 8);
    CHECK(stable_prime_count(7, TowerBase::rationals()) == 2);
    CHECK(stable_prime_count(17, TowerBase::rationals()) == 4);
    CHECK(stabilization_level(7, TowerBase::rationals()) == 1);
    CHECK_THROWS_AS(residue_degree_in_Qn(2, 3), InvalidInput);
    CHECK_THROWS_AS(residue_degree_in_Qn(9, 3), InvalidInput);
    CHECK_THROWS_AS(primes_above_in_Qinf(15), InvalidInput);
}

TEST_CASE("splitting invariants for q < 1000, n <= 12") {
    for (long q : odd_primes_below(1000)) {
        CAPTURE(q);
        const TowerBase Q = TowerBase::rationals();
        const Integer stable = stable_prime_count(q, Q);
        const unsigned from = stabilization_level(q, Q);
        CHECK(stable == primes_above_in_Qinf(q));
        Integer prev_g = 0, prev_f = 0;
        for (unsigned n = 0; n <= 12; ++n) {
            const auto r = split_in_tower(q, Q, n);
            REQUIRE(r.f == oracle::order_mod_pm1(q, n));
            CHECK(r.e == 1);
            CHECK(r.field_degree() == Integer(1) << n);
            CHECK(r.g >= prev_g);
            CHECK(r.g <= stable);
            if (n >= from) {
                CHECK(r.g == stable);
                if (n > from) CHECK(r.f == 2 * prev_f);
            } else {
                CHECK(r.g < stable);
            }
            prev_g = r.g;
            prev_f = r.f;
        }
    }
}

TEST_CASE("splitting over the Fermat bases") {
    // 7 is inert in the cubic field k of conductor 9: f = 3, g = 2 in k_1
    const auto r7 = primes_above_in_fermat_tower(7, 3, 1);
    CHECK(r7.f == 3);
    CHECK(r7.g == 2);
    // 17 = -1 mod 9 splits completely in k
    CHECK(residue_degree_in_fermat_base(17, 3) == 1);
    const auto r17 = primes_above_in_fermat_tower(17, 3, 1);
    CHECK(r17.f == 1);
    CHECK(r17.g == 6);
    CHECK_THROWS_AS(primes_above_in_fermat_tower(3, 3, 0), InvalidInput);
    CHECK_THROWS_AS(primes_above_in_fermat_tower(7, 7, 0), InvalidInput);
    CHECK_THROWS_AS(TowerBase::fermat(65537), InvalidInput);
    CHECK(TowerBase::fermat(5).to_string() == "fermat(5)");
    CHECK(TowerBase::fermat(17).degree() == 17);

    for (int p : {3, 5, 17}) {
        for (long q : odd_primes_below(400)) {
            if (q == p) continue;
            CAPTURE(p);
            CAPTURE(q);
            const long fk = oracle::order_in_degree_p_quotient(q, p);
            REQUIRE(residue_degree_in_fermat_base(q, p) == fk);
            const TowerBase base = TowerBase::fermat(p);
            const Integer stable = stable_prime_count(q, base);
            // the degree-p part and the 2-power part split independently
            CHECK(stable == primes_above_in_Qinf(q) * (p / fk));
            for (unsigned n = 0; n <= 8; ++n) {
                const auto r = split_in_tower(q, base, n);
                CHECK(r.field_degree() == Integer(p) << n);
                CHECK(r.f == std::lcm(fk, oracle::order_mod_pm1(q, n)));
            }
        }
    }
    // over Q(sqrt 2) the tower is Q_{n+1}
    for (long q : odd_primes_below(200)) {
        const auto r = primes_above_in_fermat_tower(q, 2, 3);
        CHECK(r.g == primes_above_in_Qn(q, 4));
        CHECK(stable_prime_count(q, TowerBase::fermat(2)) == primes_above_in_Qinf(q));
    }
}

TEST_CASE("ramified sets") {
    const auto s = ramified_set(21, 2);
    CHECK(s.total == 3);
    REQUIRE(s.entries.size() == 2);
    CHECK(s.entries[0] == std::pair<Integer, Integer>(3, 1));
    CHECK(s.entries[1] == std::pair<Integer, Integer>(7, 2));
    CHECK_FALSE(s.level.has_value());
    // at level 0 of the tower over Q(sqrt 2), 7 already splits
    const auto s0 = ramified_set(21, 2, 0u);
    CHECK(s0.total == 3);
    CHECK(ramified_set(14, 2).total == 2);  // 2 is never counted
    CHECK_THROWS_AS(ramified_set(21, 3), InvalidInput);
    CHECK_THROWS_AS(ramified_set(12, 2), InvalidInput);
    CHECK_THROWS_AS(ramified_set(2, 2), InvalidInput);
    CHECK_THROWS_AS(ramified_set(7, 7), InvalidInput);
    CHECK(ramified_set(7, 3).total == 2);   // 7 inert in k, 2 places in K
    CHECK(ramified_set(17, 3).total == 12); // 3 places in k times 4
}

TEST_CASE("Fermat numbers") {
    CHECK(fermat_number(0) == 3);
    CHECK(fermat_number(4) == 65537);
    for (unsigned j = 1; j <= 6; ++j) CHECK(fermat_identity_check(j));
    for (unsigned i = 0; i <= 6; ++i)
        for (unsigned j = 0; j < i; ++j) CHECK(gcd(fermat_number(i), fermat_number(j)) == 1);
    CHECK(fermat_number(5) == Integer("4294967297"));
    CHECK_FALSE(is_prime(fermat_number(5)));
    for (int p : {3, 5, 17, 257}) {
        CHECK(two_inert_in_k(p));
        CHECK(oracle::direct_order(2, static_cast<long>(p) * p) % p == 0);
    }
    CHECK(two_inert_in_k(2));
    CHECK_THROWS_AS(two_inert_in_k(7), InvalidInput);
}

TEST_CASE("real places and unit characteristic") {
    CHECK(t_infinity(0, 1) == 1);
    CHECK(t_infinity(3, 5) == 40);
    CHECK(unit_euler_char(8) == 7);
    CHECK_THROWS_AS(unit_euler_char(0), InvalidInput);
}
