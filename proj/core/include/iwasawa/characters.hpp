#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwasawa/cyclotomic.hpp"
#include "iwasawa/exact_arith.hpp"

namespace iwasawa {

/// (Z/m)^x with the generators of unit_group_structure(m) and discrete logs
/// with respect to them.
class UnitGroup {
public:
    explicit UnitGroup(std::int64_t modulus);

    std::int64_t modulus() const { return modulus_; }
    const std::vector<UnitGenerator>& generators() const { return gens_; }
    std::int64_t order() const;

    /// Exponent vector e with a = prod g_i^{e_i} (mod m); empty when a is not a unit.
    std::optional<std::vector<std::int64_t>> log(std::int64_t a) const;

private:
    struct Component {
        std::int64_t prime_power;
        std::int64_t local_generator;  // primitive root, or 5 at powers of two
        bool two_power;
    };
    std::int64_t modulus_;
    std::vector<UnitGenerator> gens_;
    std::vector<Component> components_;  // one per prime-power block
};

/// chi(g_i) = exp(2 pi i * exponent_i / order_i) on the fixed generators g_i
/// of (Z/m)^x. Values are reported as exponents k of zeta_{order(chi)}.
class DirichletCharacter {
public:
    DirichletCharacter(std::int64_t modulus, std::vector<std::int64_t> exponents);
    static DirichletCharacter trivial(std::int64_t modulus);

    std::int64_t modulus() const { return modulus_; }
    const std::vector<UnitGenerator>& generators() const { return gens_; }
    const std::vector<std::int64_t>& exponents() const { return exps_; }
    /// Least n with chi^n trivial.
    std::int64_t order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    /// k with chi(a) = zeta_order^k, empty when gcd(a, m) > 1.
    std::optional<std::int64_t> value_exponent(std::int64_t a) const;

    /// value_exponent for every residue 0..m-1, with -1 marking non-units.
    /// One pass over the group, O(phi(m)).
    std::vector<std::int64_t> value_table() const;

    std::string to_string() const;

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus_ == b.modulus_ && a.exps_ == b.exps_;
    }

private:
    std::int64_t weight(std::size_t i) const;

    std::int64_t modulus_;
    std::vector<UnitGenerator> gens_;
    std::vector<std::int64_t> exps_;
    std::int64_t order_;
};

/// chi(a) at level order(chi); zero when a is not a unit.
CyclotomicNumber char_eval(const DirichletCharacter& chi, const Integer& a);
bool char_is_odd(const DirichletCharacter& chi);

/// The same character viewed modulo a multiple of its modulus.
DirichletCharacter char_lift(const DirichletCharacter& chi, std::int64_t modulus);
/// Pointwise product at modulus lcm(m1, m2); never primitivised.
DirichletCharacter char_mul(const DirichletCharacter& a, const DirichletCharacter& b);
DirichletCharacter char_pow(const DirichletCharacter& chi, std::int64_t k);

std::int64_t char_conductor(const DirichletCharacter& chi);
/// The primitive character modulo char_conductor(chi) inducing chi.
DirichletCharacter char_primitive(const DirichletCharacter& chi);

bool is_fundamental_discriminant(const Integer& D);
/// Discriminant of Q(sqrt(-d)) for squarefree d > 0: -d if d = 3 mod 4, else -4d.
Integer imaginary_quadratic_discriminant(const Integer& d);

/// Primitive quadratic character mod |D| attached to Q(sqrt(D)).
DirichletCharacter kronecker_character(const Integer& D);

/// Characters of Gal(Q_n/Q) for the n-th layer of the cyclotomic Z_2-extension
/// of Q: all 2^n even characters modulo 2^{n+2}, ordered by the exponent on 5.
std::vector<DirichletCharacter> even_two_power_characters(unsigned n);

}  // namespace iwasawa
