#include "iwasawa/exact_arith.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

namespace iwasawa {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::int64_t to_int64(const Integer& n) {
    if (!n.fits_slong_p()) throw InvalidInput("integer " + n.get_str() + " exceeds the 64-bit range");
    return n.get_si();
}

Integer parse_integer(const std::string& text) {
    Integer n;
    std::string body = text;
    if (!body.empty() && body.front() == '+') body.erase(body.begin());
    if (body.empty() || n.set_str(body, 10) != 0)
        throw InvalidInput("not an integer: '" + text + "'");
    return n;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_u64(std::uint64_t n) {
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for all n < 3.3 * 10^24.
    constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t a : bases) {
        if (a % n == 0) continue;
        std::uint64_t x = pow_mod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < 65536) {
        const unsigned long v = n.get_ui();
        for (unsigned long k = 2; k * k <= v; ++k)
            if (v % k == 0) return false;
        return true;
    }
    if (n.fits_ulong_p()) {
        const std::uint64_t v = n.get_ui();
        for (std::uint64_t k : {2u, 3u, 5u, 7u, 11u, 13u})
            if (v % k == 0) return false;
        return miller_rabin_u64(v);
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n) {
    if (n == 0) throw InvalidInput("cannot factor 0");
    Integer m = abs(n);
    std::vector<std::pair<Integer, unsigned>> out;
    auto strip = [&](const Integer& p) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    // 6k +- 1 wheel; desk-scale inputs only
    constexpr unsigned long kTrialLimit = 100'000'000UL;
    for (unsigned long k = 5; m > 1; k += 6) {
        if (Integer(k) * k > m) break;
        if (k > kTrialLimit) {
            if (!is_prime(m)) throw InvalidInput("integer too large to factor by trial division");
            break;
        }
        strip(Integer(k));
        strip(Integer(k + 2));
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

bool is_squarefree(const Integer& n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factor(n))
        if (e > 1) return false;
    return true;
}

Integer euler_phi(const Integer& n) {
    if (n < 1) throw InvalidInput("euler_phi needs n >= 1");
    Integer phi = n;
    for (const auto& [p, e] : factor(n)) phi = phi / p * (p - 1);
    return phi;
}

Integer pow_mod(const Integer& base, const Integer& exp, const Integer& mod) {
    if (exp < 0) throw InvalidInput("negative exponent in pow_mod");
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

unsigned ord_p(const Integer& n, const Integer& p) {
    if (n == 0) throw InvalidInput("ord_p(0) is undefined");
    if (!is_prime(p)) throw InvalidInput("ord_p needs a prime, got " + p.get_str());
    Integer m = n;
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++e;
    }
    return e;
}

Integer multiplicative_order(const Integer& a, const Integer& m) {
    if (m < 2) throw InvalidInput("multiplicative_order needs modulus >= 2");
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (g != 1) throw InvalidInput("multiplicative_order: gcd(a, m) != 1");
    Integer order = euler_phi(m);
    for (const auto& [q, e] : factor(order)) {
        for (unsigned i = 0; i < e; ++i) {
            if (pow_mod(a, order / q, m) != 1) break;
            order /= q;
        }
    }
    return order;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw InvalidInput("divisors needs n >= 1");
    std::vector<std::int64_t> small, large;
    for (std::int64_t k = 1; k * k <= n; ++k) {
        if (n % k) continue;
        small.push_back(k);
        if (k != n / k) large.push_back(n / k);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {

std::int64_t pow_mod_i64(std::int64_t b, std::int64_t e, std::int64_t m) {
    return static_cast<std::int64_t>(pow_mod_u64(static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(e),
                                                 static_cast<std::uint64_t>(m)));
}

// Least g that generates (Z/q)^x for q = l^k, l odd.
std::int64_t least_primitive_root(std::int64_t l, std::int64_t q) {
    const std::int64_t phi = q / l * (l - 1);
    std::vector<std::int64_t> prime_factors;
    for (const auto& [r, e] : factor(Integer(static_cast<long>(phi)))) prime_factors.push_back(r.get_si());
    for (std::int64_t g = 2; g < q; ++g) {
        if (g % l == 0) continue;
        bool primitive = std::all_of(prime_factors.begin(), prime_factors.end(),
                                     [&](std::int64_t r) { return pow_mod_i64(g, phi / r, q) != 1; });
        if (primitive) return g;
    }
    throw VerificationFailure("no primitive root found");
}

// x = g mod q, x = 1 mod (m / q)
std::int64_t crt_lift(std::int64_t g, std::int64_t q, std::int64_t m) {
    const std::int64_t rest = m / q;
    if (rest == 1) return g % m;
    Integer inv;
    const Integer rest_z(static_cast<long>(rest)), q_z(static_cast<long>(q));
    mpz_invert(inv.get_mpz_t(), rest_z.get_mpz_t(), q_z.get_mpz_t());
    // x = 1 + rest * t with rest * t = g - 1 (mod q)
    Integer t = (Integer(static_cast<long>(g - 1)) * inv) % q_z;
    if (t < 0) t += q_z;
    Integer x = (1 + rest_z * t) % Integer(static_cast<long>(m));
    return x.get_si();
}

}  // namespace

std::vector<UnitGenerator> unit_group_structure(std::int64_t m) {
    if (m < 1) throw InvalidInput("unit_group_structure needs m >= 1");
    if (m > (std::int64_t{1} << 40)) throw InvalidInput("modulus too large for unit group enumeration");
    std::vector<UnitGenerator> gens;
    if (m == 1) return gens;
    for (const auto& [l_z, k] : factor(Integer(static_cast<long>(m)))) {
        const std::int64_t l = l_z.get_si();
        std::int64_t q = 1;
        for (unsigned i = 0; i < k; ++i) q *= l;
        if (l == 2) {
            if (k == 1) continue;
            gens.push_back({crt_lift(q - 1, q, m), 2});
            if (k >= 3) gens.push_back({crt_lift(5, q, m), q / 4});
        } else {
            gens.push_back({crt_lift(least_primitive_root(l, q), q, m), q / l * (l - 1)});
        }
    }
    return gens;
}

}  // namespace iwasawa
