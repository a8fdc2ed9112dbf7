#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iwasawa/exact_arith.hpp"

namespace iwasawa {

/// Base field of a cyclotomic Z_2-tower: Q itself, or the degree-p real
/// subfield k of Q(zeta_{2p^2}) for a Fermat prime p.
struct TowerBase {
    enum class Kind { rationals, fermat };
    Kind kind = Kind::rationals;
    int p = 1;  // only meaningful for fermat

    static TowerBase rationals() { return {}; }
    static TowerBase fermat(int p);

    /// [k : Q]
    int degree() const { return kind == Kind::rationals ? 1 : p; }
    std::string to_string() const;  // "rationals" or "fermat(p)"

    friend bool operator==(const TowerBase&, const TowerBase&) = default;
};

/// The Fermat primes for which the base field is known to have odd class number.
inline constexpr int kOddClassNumberFermatPrimes[] = {2, 3, 5, 17, 257};

bool is_supported_fermat_prime(int p);

struct PlaceSplittingReport {
    Integer q;
    unsigned level = 0;
    Integer g;  // primes above q
    Integer f;  // residue degree
    Integer e;  // ramification index
    TowerBase base;

    Integer field_degree() const { return e * f * g; }
};

struct RamifiedSet {
    Integer d;
    TowerBase base;
    std::optional<unsigned> level;  // empty = the whole tower
    std::vector<std::pair<Integer, Integer>> entries;  // (q, number of places above q), q ascending
    Integer total;
};

/// Order of q in (Z/2^{n+2})^x / {+-1}: the residue degree of q in Q_n.
Integer residue_degree_in_Qn(const Integer& q, unsigned n);

/// Number of primes of Q_n above q (= 2^n / f).
Integer primes_above_in_Qn(const Integer& q, unsigned n);

/// 2^{ord_2(q^2 - 1) - 3}, the number of primes of Q_infinity above q.
Integer primes_above_in_Qinf(const Integer& q);

/// Residue degree of q in the degree-p subfield of Q(zeta_{p^2}), i.e. the
/// order of q in (Z/p^2)^x modulo its subgroup of order p - 1. p odd.
Integer residue_degree_in_fermat_base(const Integer& q, int p);

/// Splitting of q in the n-th layer k_n = k Q_n of the tower over k.
/// For p = 2, k = Q(sqrt 2) = Q_1 and k_n = Q_{n+1}.
PlaceSplittingReport primes_above_in_fermat_tower(const Integer& q, int p, unsigned n);

/// Primes above q in the n-th layer of the given tower.
PlaceSplittingReport split_in_tower(const Integer& q, const TowerBase& base, unsigned n);

/// Number of places above q in the whole tower, found by walking up the layers
/// until the count stops growing (finitely split primes in a Z_2-tower stop
/// splitting for good as soon as they stop once).
Integer stable_prime_count(const Integer& q, const TowerBase& base);

/// First layer from which the prime count equals the stable count.
unsigned stabilization_level(const Integer& q, const TowerBase& base);

/// The finite places of K = k_infinity (or of k_n, when `level` is given) not
/// above 2 that ramify in K(sqrt(-d)) / K: everything above the odd primes of d.
RamifiedSet ramified_set(const Integer& d, int p, std::optional<unsigned> level = std::nullopt);

Integer fermat_number(unsigned j);

/// F_j - 2 == F_0 F_1 ... F_{j-1}
bool fermat_identity_check(unsigned j);

/// p divides the order of 2 mod p^2, i.e. 2 is inert in the degree-p field k.
/// For p = 2 (k = Q(sqrt 2), where 2 ramifies) this returns true: there is
/// still exactly one prime above 2.
bool two_inert_in_k(int p);

/// Real places of k_n: base_degree * 2^n.
Integer t_infinity(unsigned n, unsigned base_degree);

/// chi(Gal(l_n/k_n), units of l_n) = t_inf - 1 for a CM quadratic extension
/// of a totally real field with t_inf real places.
long unit_euler_char(const Integer& t_inf);

}  // namespace iwasawa
