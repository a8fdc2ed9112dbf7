#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "iwasawa/error.hpp"

namespace iwasawa {

using Integer = mpz_class;
using Rational = mpq_class;  // gmp keeps results canonical; see make_rational

/// Builds num/den in lowest terms with positive denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Narrowing conversion, throws InvalidInput when out of range.
std::int64_t to_int64(const Integer& n);

Integer parse_integer(const std::string& text);

// Deterministic trial division below 2^16, deterministic Miller-Rabin for
// 64-bit inputs, GMP's BPSW-based test beyond that.
bool is_prime(const Integer& n);

/// Prime factorisation by trial division, primes ascending. |n| >= 1.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n);

bool is_squarefree(const Integer& n);
Integer euler_phi(const Integer& n);
Integer pow_mod(const Integer& base, const Integer& exp, const Integer& mod);
Integer lcm(const Integer& a, const Integer& b);

/// Largest e with p^e | n.
unsigned ord_p(const Integer& n, const Integer& p);

/// Least k >= 1 with a^k = 1 (mod m). Requires gcd(a, m) = 1 and m >= 2.
Integer multiplicative_order(const Integer& a, const Integer& m);

/// Signed divisors are never needed; returns the positive divisors of n > 0
/// in ascending order.
std::vector<std::int64_t> divisors(std::int64_t n);

struct UnitGenerator {
    std::int64_t generator;
    std::int64_t order;

    friend bool operator==(const UnitGenerator&, const UnitGenerator&) = default;
};

/// Generators of (Z/m)^x as a product of cyclic groups, one block per prime
/// power of m (ascending primes). At 2^k, k >= 3 the block is (-1, 5); odd
/// prime powers get their least primitive root. Each generator is lifted by
/// CRT so that it is 1 modulo the other prime powers. m = 1 and m = 2 give
/// the empty list.
std::vector<UnitGenerator> unit_group_structure(std::int64_t m);

}  // namespace iwasawa
