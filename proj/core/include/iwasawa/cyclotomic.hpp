#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwasawa/exact_arith.hpp"

namespace iwasawa {

/// The m-th cyclotomic polynomial, coefficients in ascending degree. Cached;
/// safe to call from several threads.
const std::vector<Integer>& cyclotomic_polynomial(std::int64_t m);

/// Exact element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
/// Every element has exactly one representation at a given level, so equality
/// is coefficient equality. Elements at different levels never compare equal;
/// lift first.
class CyclotomicNumber {
public:
    CyclotomicNumber() : CyclotomicNumber(1) {}
    explicit CyclotomicNumber(std::int64_t level);

    static CyclotomicNumber from_rational(const Rational& value, std::int64_t level = 1);
    /// zeta_level^k for any integer k.
    static CyclotomicNumber root_of_unity(std::int64_t level, std::int64_t k);
    /// Reduces an arbitrary polynomial in zeta_level modulo Phi_level.
    static CyclotomicNumber from_polynomial(std::int64_t level, std::vector<Rational> coefficients);

    std::int64_t level() const { return level_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& other);
    CyclotomicNumber& operator-=(const CyclotomicNumber& other);
    CyclotomicNumber& operator*=(const Rational& scalar);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& s) { return a *= s; }
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return a.level_ == b.level_ && a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const;

private:
    std::int64_t level_;
    std::vector<Rational> coeffs_;
};

/// Product of two numbers at the same level.
CyclotomicNumber cyclo_mul(const CyclotomicNumber& x, const CyclotomicNumber& y);

/// Re-expresses x at level M (level(x) must divide M), zeta_m = zeta_M^{M/m}.
CyclotomicNumber cyclo_lift(const CyclotomicNumber& x, std::int64_t target_level);

std::optional<Rational> is_rational(const CyclotomicNumber& x);

}  // namespace iwasawa
