#include "iwasawa/splitting.hpp"

#include <algorithm>

namespace iwasawa {

namespace {

Integer two_pow(unsigned n) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
    return r;
}

void require_odd_prime(const Integer& q) {
    if (q == 2) throw InvalidInput("q = 2 is excluded: only odd primes are unramified in the tower");
    if (!is_prime(q)) throw InvalidInput("q = " + q.get_str() + " is not prime");
}

bool is_fermat_prime(int p) {
    if (p < 3 || !is_prime(p)) return false;
    const int t = p - 1;
    return (t & (t - 1)) == 0;
}

}  // namespace

TowerBase TowerBase::fermat(int p) {
    if (!is_supported_fermat_prime(p))
        throw InvalidInput("base prime " + std::to_string(p) + " is not one of 2, 3, 5, 17, 257");
    TowerBase b;
    b.kind = Kind::fermat;
    b.p = p;
    return b;
}

std::string TowerBase::to_string() const {
    return kind == Kind::rationals ? "rationals" : "fermat(" + std::to_string(p) + ")";
}

bool is_supported_fermat_prime(int p) {
    return std::find(std::begin(kOddClassNumberFermatPrimes), std::end(kOddClassNumberFermatPrimes), p) !=
           std::end(kOddClassNumberFermatPrimes);
}

Integer residue_degree_in_Qn(const Integer& q, unsigned n) {
    require_odd_prime(q);
    const Integer mod = two_pow(n + 2);
    // the quotient is a 2-group, so the order is the first power of two that works
    Integer x = q % mod, f = 1;
    while (x != 1 && x != mod - 1) {
        x = x * x % mod;
        f *= 2;
    }
    return f;
}

Integer primes_above_in_Qn(const Integer& q, unsigned n) { return two_pow(n) / residue_degree_in_Qn(q, n); }

Integer primes_above_in_Qinf(const Integer& q) {
    require_odd_prime(q);
    return two_pow(ord_p(q * q - 1, 2) - 3);
}

Integer residue_degree_in_fermat_base(const Integer& q, int p) {
    if (p < 3 || !is_prime(p)) throw InvalidInput("residue_degree_in_fermat_base needs an odd prime p");
    if (q % p == 0) throw InvalidInput("q must be prime to p");
    const Integer p2 = Integer(p) * p;
    // q^{p-1} lands in the p-part of the cyclic group (Z/p^2)^x
    return multiplicative_order(pow_mod(q, p - 1, p2), p2);
}

PlaceSplittingReport primes_above_in_fermat_tower(const Integer& q, int p, unsigned n) {
    const TowerBase base = TowerBase::fermat(p);
    require_odd_prime(q);
    if (q == p) throw InvalidInput("q = p ramifies in k and is excluded");
    PlaceSplittingReport rep;
    rep.q = q;
    rep.level = n;
    rep.base = base;
    rep.e = 1;
    if (p == 2) {
        rep.f = residue_degree_in_Qn(q, n + 1);
        rep.g = two_pow(n + 1) / rep.f;
        return rep;
    }
    // Frobenius order in Gal(k/Q) x Gal(Q_n/Q)
    rep.f = lcm(residue_degree_in_fermat_base(q, p), residue_degree_in_Qn(q, n));
    rep.g = Integer(p) * two_pow(n) / rep.f;
    return rep;
}

PlaceSplittingReport split_in_tower(const Integer& q, const TowerBase& base, unsigned n) {
    if (base.kind == TowerBase::Kind::fermat) return primes_above_in_fermat_tower(q, base.p, n);
    PlaceSplittingReport rep;
    rep.q = q;
    rep.level = n;
    rep.base = base;
    rep.e = 1;
    rep.f = residue_degree_in_Qn(q, n);
    rep.g = two_pow(n) / rep.f;
    return rep;
}

Integer stable_prime_count(const Integer& q, const TowerBase& base) {
    Integer prev = split_in_tower(q, base, 0).g;
    for (unsigned n = 1; n < 200; ++n) {
        Integer g = split_in_tower(q, base, n).g;
        if (g == prev) return g;
        prev = std::move(g);
    }
    throw VerificationFailure("prime count above " + q.get_str() + " did not stabilise");
}

unsigned stabilization_level(const Integer& q, const TowerBase& base) {
    const Integer stable = stable_prime_count(q, base);
    unsigned n = 0;
    while (split_in_tower(q, base, n).g != stable) ++n;
    return n;
}

RamifiedSet ramified_set(const Integer& d, int p, std::optional<unsigned> level) {
    if (d <= 2) throw InvalidInput("d must be > 2, got " + d.get_str());
    if (!is_squarefree(d)) throw InvalidInput("d = " + d.get_str() + " is not squarefree");
    const TowerBase base = TowerBase::fermat(p);
    Integer g;
    mpz_gcd_ui(g.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(p));
    if (g > 2) throw InvalidInput("gcd(d, p) = " + g.get_str() + " exceeds 2");

    RamifiedSet s;
    s.d = d;
    s.base = base;
    s.level = level;
    s.total = 0;
    for (const auto& [q, e] : factor(d)) {
        if (q == 2) continue;
        Integer count = level ? split_in_tower(q, base, *level).g : stable_prime_count(q, base);
        s.total += count;
        s.entries.emplace_back(q, std::move(count));
    }
    return s;
}

Integer fermat_number(unsigned j) {
    if (j > 24) throw InvalidInput("fermat_number: index too large");
    return two_pow(1u << j) + 1;
}

bool fermat_identity_check(unsigned j) {
    if (j < 1) throw InvalidInput("fermat_identity_check needs j >= 1");
    Integer product = 1;
    for (unsigned i = 0; i < j; ++i) product *= fermat_number(i);
    return fermat_number(j) - 2 == product;
}

bool two_inert_in_k(int p) {
    if (p == 2) return true;
    if (!is_fermat_prime(p)) throw InvalidInput(std::to_string(p) + " is not a Fermat prime");
    const Integer p2 = Integer(p) * p;
    return multiplicative_order(2, p2) % p == 0;
}

Integer t_infinity(unsigned n, unsigned base_degree) { return Integer(base_degree) * two_pow(n); }

long unit_euler_char(const Integer& t_inf) {
    if (t_inf < 1) throw InvalidInput("t_infinity must be >= 1");
    return to_int64(t_inf) - 1;
}

}  // namespace iwasawa
