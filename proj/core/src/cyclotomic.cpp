#include "iwasawa/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace iwasawa {

namespace {

using Poly = std::vector<Integer>;

// Exact quotient by a monic divisor.
Poly poly_divexact(Poly a, const Poly& monic) {
    const std::size_t db = monic.size() - 1;
    Poly q(a.size() - db);
    for (std::size_t i = a.size(); i-- > db;) {
        const Integer c = a[i];
        q[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * monic[j];
    }
    return q;
}

Poly compute_cyclotomic(std::int64_t m) {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    Poly num(static_cast<std::size_t>(m) + 1);
    num[0] = -1;
    num[static_cast<std::size_t>(m)] = 1;
    for (std::int64_t d : divisors(m)) {
        if (d == m) continue;
        num = poly_divexact(num, cyclotomic_polynomial(d));
    }
    return num;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(std::int64_t m) {
    if (m < 1) throw InvalidInput("cyclotomic_polynomial needs m >= 1");
    static std::mutex mu;
    static std::map<std::int64_t, Poly> cache;  // node-based: references stay valid
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    Poly phi = compute_cyclotomic(m);
    std::lock_guard lock(mu);
    return cache.try_emplace(m, std::move(phi)).first->second;
}

CyclotomicNumber::CyclotomicNumber(std::int64_t level) : level_(level) {
    if (level < 1) throw InvalidInput("cyclotomic level must be >= 1");
    coeffs_.assign(cyclotomic_polynomial(level).size() - 1, Rational(0));
}

CyclotomicNumber CyclotomicNumber::from_rational(const Rational& value, std::int64_t level) {
    CyclotomicNumber x(level);
    x.coeffs_[0] = value;
    return x;
}

CyclotomicNumber CyclotomicNumber::root_of_unity(std::int64_t level, std::int64_t k) {
    k %= level;
    if (k < 0) k += level;
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    c[static_cast<std::size_t>(k)] = 1;
    return from_polynomial(level, std::move(c));
}

CyclotomicNumber CyclotomicNumber::from_polynomial(std::int64_t level, std::vector<Rational> c) {
    CyclotomicNumber x(level);
    const Poly& phi = cyclotomic_polynomial(level);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = c.size(); i-- > deg;) {
        if (c[i] == 0) continue;
        const Rational lead = c[i];
        for (std::size_t j = 0; j <= deg; ++j) c[i - deg + j] -= lead * phi[j];
    }
    for (std::size_t i = 0; i < std::min(deg, c.size()); ++i) x.coeffs_[i] = c[i];
    return x;
}

bool CyclotomicNumber::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& other) {
    if (other.level_ != level_) throw InvalidInput("cyclotomic sum: level mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& other) {
    if (other.level_ != level_) throw InvalidInput("cyclotomic difference: level mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& scalar) {
    for (auto& q : coeffs_) q *= scalar;
    return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.level_ != b.level_) throw InvalidInput("cyclotomic product: level mismatch");
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return CyclotomicNumber::from_polynomial(a.level_, std::move(c));
}

std::string CyclotomicNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        os << (first ? "" : " + ") << coeffs_[i];
        if (i) os << "*z" << level_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CyclotomicNumber cyclo_mul(const CyclotomicNumber& x, const CyclotomicNumber& y) { return x * y; }

CyclotomicNumber cyclo_lift(const CyclotomicNumber& x, std::int64_t target_level) {
    if (target_level < 1 || target_level % x.level() != 0)
        throw InvalidInput("cyclo_lift: level " + std::to_string(x.level()) + " does not divide " +
                           std::to_string(target_level));
    const std::size_t step = static_cast<std::size_t>(target_level / x.level());
    const auto& c = x.coefficients();
    std::vector<Rational> spread(c.empty() ? 1 : (c.size() - 1) * step + 1);
    for (std::size_t i = 0; i < c.size(); ++i) spread[i * step] = c[i];
    return CyclotomicNumber::from_polynomial(target_level, std::move(spread));
}

std::optional<Rational> is_rational(const CyclotomicNumber& x) {
    const auto& c = x.coefficients();
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return std::nullopt;
    return c[0];
}

}  // namespace iwasawa
