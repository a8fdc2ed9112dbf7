#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iwasawa/characters.hpp"
#include "iwasawa/lambda_formulas.hpp"

namespace iwasawa {

struct QuadraticForm {
    Integer a, b, c;
    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

struct FormClassGroup {
    Integer D;
    std::vector<QuadraticForm> forms;  // reduced, primitive, ordered by (a, b)
    Integer h;
};

/// Reduced primitive forms (a, b, c), b^2 - 4ac = D, |b| <= a <= c and b >= 0
/// whenever |b| = a or a = c.
FormClassGroup reduced_forms(const Integer& D);

/// h(D) = w / (2|D|) * |sum_{a < |D|} chi_D(a) a| for a fundamental D < 0.
Integer dirichlet_class_number(const Integer& D);

/// B_1(chi) = (1/f) sum_{a=1}^{f} chi(a) a, at level order(chi). chi must be
/// primitive and nontrivial.
CyclotomicNumber generalized_bernoulli_B1(const DirichletCharacter& chi);

/// The 2^n odd characters of l_n = Q_n(sqrt(-d)), each primitive:
/// chi_D * psi for psi running over the even characters of Q_n.
std::vector<DirichletCharacter> odd_characters_of_level(const Integer& d, unsigned n);

/// Number of roots of unity in l_n.
long roots_of_unity_in_level(const Integer& d, unsigned n);

enum class UnitIndexAmbiguity { exact, plus_minus_one_bit };
std::string to_string(UnitIndexAmbiguity q);

struct ClassNumberReport {
    Integer d;
    unsigned level = 0;
    std::int64_t conductor = 0;          // conductor of l_n
    std::size_t character_count = 0;     // all characters of l_n
    std::size_t odd_character_count = 0; // the ones entering h^-
    long w = 2;
    /// w * prod (-B_1(chi)/2); equals h^- up to the unit index Q in {1, 2}.
    Rational h_minus;
    long ord2 = 0;
    UnitIndexAmbiguity q_ambiguity = UnitIndexAmbiguity::exact;
};

struct OracleConfig {
    unsigned max_level = 5;
};

/// Relative class number of l_n from generalized Bernoulli numbers. Each Galois
/// orbit of characters is multiplied out and must come out a positive rational.
ClassNumberReport h_minus(const Integer& d, unsigned n, const OracleConfig& config = {});

struct OracleRun {
    LambdaResult result;
    std::vector<ClassNumberReport> levels;  // n = 1 .. n_max
    std::vector<long> differences;          // ord2(h_n) - ord2(h_{n-1}), n = 2 .. n_max
};

/// lambda from first differences of ord_2(h^-_n), n = 1..n_max. Throws
/// NotStabilized when the last two differences disagree or grow like 2^n.
OracleRun run_oracle(const Integer& d, unsigned n_max);
LambdaResult lambda_from_oracle(const Integer& d, unsigned n_max);

}  // namespace iwasawa
