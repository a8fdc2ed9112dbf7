#include "iwasawa/analytic_oracle.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace iwasawa {

FormClassGroup reduced_forms(const Integer& D) {
    Integer r = D % 4;
    if (r < 0) r += 4;
    if (D >= 0 || (r != 0 && r != 1)) throw InvalidInput(D.get_str() + " is not a negative discriminant");
    FormClassGroup g;
    g.D = D;
    const Integer absD = -D;
    for (Integer a = 1; 3 * a * a <= absD; ++a) {
        for (Integer b = -a + 1; b <= a; ++b) {
            const Integer num = b * b - D;
            if (!mpz_divisible_p(num.get_mpz_t(), Integer(4 * a).get_mpz_t())) continue;
            const Integer c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;
            Integer k;
            mpz_gcd(k.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_gcd(k.get_mpz_t(), k.get_mpz_t(), c.get_mpz_t());
            if (k != 1) continue;
            g.forms.push_back({a, b, c});
        }
    }
    g.h = static_cast<unsigned long>(g.forms.size());
    return g;
}

Integer dirichlet_class_number(const Integer& D) {
    if (D >= 0) throw InvalidInput("dirichlet_class_number needs D < 0");
    const DirichletCharacter chi = kronecker_character(D);  // validates D
    const auto table = chi.value_table();
    const std::int64_t m = chi.modulus();
    Integer sum = 0;
    for (std::int64_t a = 1; a < m; ++a) {
        const std::int64_t k = table[static_cast<std::size_t>(a)];
        if (k < 0) continue;
        sum += (k == 0) ? Integer(static_cast<long>(a)) : Integer(-static_cast<long>(a));
    }
    const long w = (D == -3) ? 6 : (D == -4) ? 4 : 2;
    const Rational h = make_rational(abs(sum) * w, 2 * abs(D));
    if (h.get_den() != 1) throw VerificationFailure("class number formula gave a non-integer");
    return h.get_num();
}

CyclotomicNumber generalized_bernoulli_B1(const DirichletCharacter& chi) {
    if (chi.is_trivial()) throw InvalidInput("B_1 is defined here only for nontrivial characters");
    const std::int64_t f = chi.modulus();
    if (char_conductor(chi) != f) throw InvalidInput("B_1 needs a primitive character");
    const std::int64_t o = chi.order();
    const auto table = chi.value_table();
    std::vector<Integer> by_power(static_cast<std::size_t>(o));
    for (std::int64_t a = 1; a < f; ++a) {
        const std::int64_t k = table[static_cast<std::size_t>(a)];
        if (k >= 0) by_power[static_cast<std::size_t>(k)] += static_cast<long>(a);
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(o));
    for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] = make_rational(by_power[j], static_cast<long>(f));
    return CyclotomicNumber::from_polynomial(o, std::move(coeffs));
}

std::vector<DirichletCharacter> odd_characters_of_level(const Integer& d, unsigned n) {
    const DirichletCharacter chi_D = kronecker_character(imaginary_quadratic_discriminant(d));
    std::vector<DirichletCharacter> out;
    for (const auto& psi : even_two_power_characters(n)) {
        DirichletCharacter chi = char_primitive(char_mul(chi_D, psi));
        if (!char_is_odd(chi)) throw VerificationFailure("odd_characters_of_level produced an even character");
        out.push_back(std::move(chi));
    }
    std::sort(out.begin(), out.end(), [](const DirichletCharacter& a, const DirichletCharacter& b) {
        if (a.modulus() != b.modulus()) return a.modulus() < b.modulus();
        return a.exponents() < b.exponents();
    });
    return out;
}

long roots_of_unity_in_level(const Integer& d, unsigned n) {
    if (d <= 2 || !is_squarefree(d)) throw InvalidInput("d must be a squarefree integer > 2");
    // quadratic subfields of l_n: Q(sqrt 2) (n >= 1), Q(sqrt -d), Q(sqrt -2d)
    if (d == 3 || (d == 6 && n >= 1)) return 6;
    return 2;
}

std::string to_string(UnitIndexAmbiguity q) {
    return q == UnitIndexAmbiguity::exact ? "exact" : "plus_minus_one_bit";
}

ClassNumberReport h_minus(const Integer& d, unsigned n, const OracleConfig& config) {
    if (n > config.max_level)
        throw InvalidInput("level " + std::to_string(n) + " exceeds the configured bound " +
                           std::to_string(config.max_level));
    const auto chars = odd_characters_of_level(d, n);

    ClassNumberReport rep;
    rep.d = d;
    rep.level = n;
    rep.odd_character_count = chars.size();
    rep.character_count = 2 * chars.size();
    rep.conductor = 1;
    for (const auto& chi : chars) rep.conductor = std::lcm(rep.conductor, chi.modulus());
    rep.w = roots_of_unity_in_level(d, n);
    rep.q_ambiguity = (n == 0) ? UnitIndexAmbiguity::exact : UnitIndexAmbiguity::plus_minus_one_bit;

    Rational product = rep.w;
    std::vector<char> done(chars.size(), 0);
    for (std::size_t i = 0; i < chars.size(); ++i) {
        if (done[i]) continue;
        const std::int64_t o = chars[i].order();
        CyclotomicNumber orbit_product = CyclotomicNumber::from_rational(1, o);
        for (std::int64_t u = 1; u < o; ++u) {
            if (std::gcd(u, o) != 1) continue;
            const DirichletCharacter conj = char_pow(chars[i], u);
            const auto it = std::find(chars.begin(), chars.end(), conj);
            if (it == chars.end()) throw VerificationFailure("character set is not Galois stable");
            done[static_cast<std::size_t>(it - chars.begin())] = 1;
            orbit_product = orbit_product * (generalized_bernoulli_B1(conj) * make_rational(-1, 2));
        }
        const auto value = is_rational(orbit_product);
        if (!value) throw VerificationFailure("Galois orbit product of -B_1/2 is not rational: " + chars[i].to_string());
        if (*value <= 0) throw VerificationFailure("Galois orbit product of -B_1/2 is not positive");
        product *= *value;
    }
    rep.h_minus = product;
    rep.ord2 = static_cast<long>(mpz_scan1(product.get_num_mpz_t(), 0)) -
               static_cast<long>(mpz_scan1(product.get_den_mpz_t(), 0));
    return rep;
}

OracleRun run_oracle(const Integer& d, unsigned n_max) {
    if (n_max < 3) throw InvalidInput("the oracle needs n_max >= 3");
    if (d <= 2 || !is_squarefree(d)) throw InvalidInput("d must be a squarefree integer > 2");
    OracleConfig config;
    config.max_level = std::max(config.max_level, n_max);

    OracleRun run;
    std::vector<std::future<ClassNumberReport>> pending;
    for (unsigned n = 1; n <= n_max; ++n)
        pending.push_back(std::async(std::launch::async, [&d, n, &config] { return h_minus(d, n, config); }));
    for (auto& f : pending) run.levels.push_back(f.get());
    for (std::size_t i = 1; i < run.levels.size(); ++i)
        run.differences.push_back(run.levels[i].ord2 - run.levels[i - 1].ord2);

    const auto& diff = run.differences;
    const std::size_t k = diff.size();
    if (k >= 3 && diff[k - 3] > 0 && diff[k - 2] >= 2 * diff[k - 3] && diff[k - 1] >= 2 * diff[k - 2])
        throw NotStabilized("ord_2 growth doubles level over level (mu-like signature)");
    if (diff[k - 1] != diff[k - 2])
        throw NotStabilized("first differences of ord_2(h^-) have not stabilised by level " +
                            std::to_string(n_max) + "; increase n_max");

    LambdaResult& r = run.result;
    r.d = d;
    r.base = TowerBase::rationals();
    r.lambda = diff[k - 1];
    r.method = LambdaMethod::oracle;
    r.assumptions = {"mu = 0", "plus part 2-trivial (h(Q_n) odd)",
                     "Hasse unit index Q in {1, 2} eliminated by first differences"};
    return run;
}

LambdaResult lambda_from_oracle(const Integer& d, unsigned n_max) { return run_oracle(d, n_max).result; }

}  // namespace iwasawa
