#include "iwasawa/characters.hpp"

#include <numeric>
#include <sstream>

namespace iwasawa {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

}  // namespace

UnitGroup::UnitGroup(std::int64_t modulus) : modulus_(modulus), gens_(unit_group_structure(modulus)) {
    if (modulus < 1) throw InvalidInput("UnitGroup: modulus must be >= 1");
    if (modulus == 1) return;
    std::size_t g = 0;
    for (const auto& [l, k] : factor(Integer(static_cast<long>(modulus)))) {
        std::int64_t q = 1;
        for (unsigned i = 0; i < k; ++i) q *= l.get_si();
        if (l == 2) {
            if (k == 1) continue;
            components_.push_back({q, 5, true});
            g += (k >= 3) ? 2 : 1;
        } else {
            components_.push_back({q, gens_.at(g).generator % q, false});
            g += 1;
        }
    }
}

std::int64_t UnitGroup::order() const {
    std::int64_t n = 1;
    for (const auto& g : gens_) n *= g.order;
    return n;
}

std::optional<std::vector<std::int64_t>> UnitGroup::log(std::int64_t a) const {
    a = mod_floor(a, modulus_);
    if (std::gcd(a, modulus_) != 1) return std::nullopt;
    std::vector<std::int64_t> e;
    e.reserve(gens_.size());
    for (const auto& c : components_) {
        std::int64_t x = a % c.prime_power;
        if (c.two_power) {
            const bool minus = (x % 4) == 3;
            e.push_back(minus ? 1 : 0);
            if (c.prime_power == 4) continue;
            if (minus) x = c.prime_power - x;
            std::int64_t y = 1, k = 0;
            while (y != x) {
                y = y * 5 % c.prime_power;
                ++k;
            }
            e.push_back(k);
        } else {
            std::int64_t y = 1, k = 0;
            while (y != x) {
                y = mul_mod(y, c.local_generator, c.prime_power);
                ++k;
            }
            e.push_back(k);
        }
    }
    return e;
}

DirichletCharacter::DirichletCharacter(std::int64_t modulus, std::vector<std::int64_t> exponents)
    : modulus_(modulus), gens_(unit_group_structure(modulus)), exps_(std::move(exponents)), order_(1) {
    if (exps_.size() != gens_.size())
        throw InvalidInput("character mod " + std::to_string(modulus) + " needs " + std::to_string(gens_.size()) +
                           " exponents");
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        exps_[i] = mod_floor(exps_[i], gens_[i].order);
        const std::int64_t reduced = gens_[i].order / std::gcd(exps_[i], gens_[i].order);
        order_ = std::lcm(order_, reduced);
    }
}

DirichletCharacter DirichletCharacter::trivial(std::int64_t modulus) {
    return DirichletCharacter(modulus, std::vector<std::int64_t>(unit_group_structure(modulus).size(), 0));
}

std::optional<std::int64_t> DirichletCharacter::value_exponent(std::int64_t a) const {
    const auto e = UnitGroup(modulus_).log(a);
    if (!e) return std::nullopt;
    std::int64_t k = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) k = (k + mul_mod((*e)[i], weight(i), order_)) % order_;
    return k;
}

std::int64_t DirichletCharacter::weight(std::size_t i) const {
    // chi(g_i) = zeta_{ord_i}^{e_i} = zeta_order^{e_i order / ord_i}; ord_i / gcd(e_i, ord_i) divides order
    return static_cast<std::int64_t>(static_cast<__int128>(exps_[i]) * order_ / gens_[i].order % order_);
}

std::vector<std::int64_t> DirichletCharacter::value_table() const {
    std::vector<std::int64_t> table(static_cast<std::size_t>(modulus_), -1);
    std::vector<std::int64_t> weight(gens_.size()), digit(gens_.size(), 0);
    for (std::size_t i = 0; i < gens_.size(); ++i) weight[i] = this->weight(i);
    std::int64_t a = 1 % modulus_, k = 0;
    for (;;) {
        table[static_cast<std::size_t>(a)] = k;
        std::size_t i = 0;
        for (; i < gens_.size(); ++i) {
            a = mul_mod(a, gens_[i].generator, modulus_);
            k = (k + weight[i]) % order_;
            if (++digit[i] < gens_[i].order) break;
            digit[i] = 0;  // g_i^{order_i} = 1, so a and k are back where they were
        }
        if (i == gens_.size()) break;
    }
    if (modulus_ == 1) table[0] = 0;
    return table;
}

std::string DirichletCharacter::to_string() const {
    std::ostringstream os;
    os << "chi mod " << modulus_ << " [";
    for (std::size_t i = 0; i < exps_.size(); ++i)
        os << (i ? ", " : "") << gens_[i].generator << "->" << exps_[i] << "/" << gens_[i].order;
    os << "]";
    return os.str();
}

CyclotomicNumber char_eval(const DirichletCharacter& chi, const Integer& a) {
    const Integer r = ((a % chi.modulus()) + chi.modulus()) % chi.modulus();
    const auto k = chi.value_exponent(r.get_si());
    if (!k) return CyclotomicNumber(chi.order());
    return CyclotomicNumber::root_of_unity(chi.order(), *k);
}

bool char_is_odd(const DirichletCharacter& chi) {
    if (chi.modulus() <= 2) return false;
    const auto k = chi.value_exponent(chi.modulus() - 1);
    return *k != 0;  // chi(-1) = +-1
}

DirichletCharacter char_lift(const DirichletCharacter& chi, std::int64_t modulus) {
    if (modulus < 1 || modulus % chi.modulus() != 0)
        throw InvalidInput("char_lift: " + std::to_string(chi.modulus()) + " does not divide " +
                           std::to_string(modulus));
    const auto gens = unit_group_structure(modulus);
    std::vector<std::int64_t> exps;
    exps.reserve(gens.size());
    for (const auto& g : gens) {
        const std::int64_t k = chi.value_exponent(g.generator % chi.modulus()).value();
        // chi(g) has order dividing ord(g); rewrite zeta_order^k as a power of zeta_{ord(g)}
        exps.push_back(k * g.order / chi.order());
    }
    return DirichletCharacter(modulus, std::move(exps));
}

DirichletCharacter char_mul(const DirichletCharacter& a, const DirichletCharacter& b) {
    const std::int64_t m = std::lcm(a.modulus(), b.modulus());
    const DirichletCharacter la = char_lift(a, m), lb = char_lift(b, m);
    std::vector<std::int64_t> exps(la.exponents().size());
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = la.exponents()[i] + lb.exponents()[i];
    return DirichletCharacter(m, std::move(exps));
}

DirichletCharacter char_pow(const DirichletCharacter& chi, std::int64_t k) {
    std::vector<std::int64_t> exps = chi.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = static_cast<std::int64_t>(static_cast<__int128>(exps[i]) * k % chi.generators()[i].order);
    return DirichletCharacter(chi.modulus(), std::move(exps));
}

std::int64_t char_conductor(const DirichletCharacter& chi) {
    const std::int64_t m = chi.modulus();
    const auto table = chi.value_table();
    for (std::int64_t f : divisors(m)) {
        bool factors = true;
        for (std::int64_t a = 1 % f; a < m && factors; a += f)
            if (table[static_cast<std::size_t>(a)] > 0) factors = false;
        if (factors) return f;
    }
    return m;
}

DirichletCharacter char_primitive(const DirichletCharacter& chi) {
    const std::int64_t m = chi.modulus();
    const std::int64_t f = char_conductor(chi);
    if (f == m) return chi;
    const auto table = chi.value_table();
    const auto gens = unit_group_structure(f);
    std::vector<std::int64_t> exps;
    for (const auto& g : gens) {
        std::int64_t a = g.generator;
        while (std::gcd(a, m) != 1) a += f;
        const std::int64_t k = table[static_cast<std::size_t>(a % m)];
        exps.push_back(k * g.order / chi.order());
    }
    return DirichletCharacter(f, std::move(exps));
}

bool is_fundamental_discriminant(const Integer& D) {
    if (D == 0 || D == 1) return false;
    Integer r = D % 4;
    if (r < 0) r += 4;
    if (r == 1) return is_squarefree(D);
    if (r != 0) return false;
    Integer m = D / 4, r4 = m % 4;
    if (r4 < 0) r4 += 4;
    return (r4 == 2 || r4 == 3) && is_squarefree(m);
}

Integer imaginary_quadratic_discriminant(const Integer& d) {
    if (d < 1 || !is_squarefree(d)) throw InvalidInput("d must be a positive squarefree integer, got " + d.get_str());
    return (d % 4 == 3) ? Integer(-d) : Integer(-4 * d);
}

DirichletCharacter kronecker_character(const Integer& D) {
    if (!is_fundamental_discriminant(D)) throw InvalidInput(D.get_str() + " is not a fundamental discriminant");
    const std::int64_t m = to_int64(abs(D));
    const auto gens = unit_group_structure(m);
    std::vector<std::int64_t> exps;
    for (const auto& g : gens) {
        const int s = mpz_kronecker(D.get_mpz_t(), Integer(static_cast<long>(g.generator)).get_mpz_t());
        exps.push_back(s == 1 ? 0 : g.order / 2);
    }
    return DirichletCharacter(m, std::move(exps));
}

std::vector<DirichletCharacter> even_two_power_characters(unsigned n) {
    if (n > 40) throw InvalidInput("level too large");
    const std::int64_t m = std::int64_t{1} << (n + 2);
    std::vector<DirichletCharacter> out;
    if (n == 0) {
        out.push_back(DirichletCharacter::trivial(m));
        return out;
    }
    const std::int64_t count = std::int64_t{1} << n;
    for (std::int64_t c = 0; c < count; ++c) out.emplace_back(m, std::vector<std::int64_t>{0, c});
    return out;
}

}  // namespace iwasawa
