#include "iwasawa/cohomology.hpp"

#include <algorithm>
#include <map>

namespace iwasawa {

namespace {

bool columns_in_lattice(const IntMatrix& lattice, const IntMatrix& vectors) {
    if (vectors.cols() == 0) return true;
    const SmithForm s = smith_normal_form(lattice);
    const std::size_t r = s.rank();
    const IntMatrix uv = s.U * vectors;
    for (std::size_t j = 0; j < vectors.cols(); ++j)
        for (std::size_t i = 0; i < uv.rows(); ++i) {
            if (i < r) {
                if (!mpz_divisible_p(uv(i, j).get_mpz_t(), s.D(i, i).get_mpz_t())) return false;
            } else if (uv(i, j) != 0) {
                return false;
            }
        }
    return true;
}

// x-part of the kernel of [map | relations]: {x : map x in span(relations)},
// together with the relations themselves.
IntMatrix preimage_of_relations(const IntMatrix& map, const IntMatrix& relations) {
    const IntMatrix k = integer_kernel(map.hconcat(relations));
    return k.top_rows(map.cols()).hconcat(relations);
}

std::vector<Integer> invariants_of(const AbelianGroupStructure& g) {
    std::vector<Integer> v = g.torsion;
    v.insert(v.end(), g.free_rank, Integer(0));
    return v;
}

std::optional<long> chi_of(int p, const AbelianGroupStructure& h1, const AbelianGroupStructure& h2) {
    if (!h1.finite() || !h2.finite()) return std::nullopt;
    auto exponent = [p](const AbelianGroupStructure& h) -> long {
        Integer n = h.order();
        long e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (n != 1) throw VerificationFailure("cohomology group order is not a power of p");
        return e;
    };
    return exponent(h2) - exponent(h1);
}

bool is_power_of(std::int64_t n, int p) {
    if (n < p) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace

CyclicGModule::CyclicGModule(int p, std::int64_t group_order, IntMatrix relations, IntMatrix action)
    : p_(p), order_(group_order), relations_(std::move(relations)), action_(std::move(action)) {
    if (!is_prime(p)) throw InvalidInput("G-module: p = " + std::to_string(p) + " is not prime");
    if (!is_power_of(group_order, p))
        throw InvalidInput("G-module: group order " + std::to_string(group_order) + " is not a positive power of p");
    if (action_.rows() != action_.cols()) throw InvalidInput("G-module: action matrix must be square");
    if (relations_.rows() != action_.rows())
        throw InvalidInput("G-module: relations have " + std::to_string(relations_.rows()) + " rows, expected " +
                           std::to_string(action_.rows()));
    if (!columns_in_lattice(relations_, action_ * relations_))
        throw InvalidInput("G-module: action does not preserve the relation lattice");
    const IntMatrix drift =
        matrix_power(action_, static_cast<unsigned long>(group_order)) - IntMatrix::identity(action_.rows());
    if (!columns_in_lattice(relations_, drift))
        throw InvalidInput("G-module: action^" + std::to_string(group_order) + " is not the identity on M");
}

AbelianGroupStructure CyclicGModule::structure() const {
    return lattice_quotient(IntMatrix::identity(rank()), relations_);
}

std::string to_string(IndecomposableKind kind) {
    switch (kind) {
        case IndecomposableKind::trivial: return "trivial";
        case IndecomposableKind::regular: return "regular";
        case IndecomposableKind::augmentation: return "augmentation";
    }
    return "?";
}

IndecomposableKind parse_indecomposable_kind(const std::string& name) {
    if (name == "trivial") return IndecomposableKind::trivial;
    if (name == "regular") return IndecomposableKind::regular;
    if (name == "augmentation") return IndecomposableKind::augmentation;
    throw InvalidInput("unknown module kind '" + name + "' (expected trivial, regular or augmentation)");
}

IntMatrix norm_element_matrix(const CyclicGModule& m) {
    const std::size_t r = m.rank();
    IntMatrix sum(r, r), power = IntMatrix::identity(r);
    for (std::int64_t i = 0; i < m.group_order(); ++i) {
        sum = sum + power;
        power = power * m.action();
    }
    return sum;
}

CohomologyReport cohomology(const CyclicGModule& m) {
    const std::size_t r = m.rank();
    const IntMatrix& R = m.relations();
    const IntMatrix g_minus_1 = m.action() - IntMatrix::identity(r);
    const IntMatrix N = norm_element_matrix(m);

    const IntMatrix fixed = preimage_of_relations(g_minus_1, R);  // lift of M^G
    const IntMatrix norms = N.hconcat(R);                          // lift of N M
    const IntMatrix kernel = preimage_of_relations(N, R);          // lift of ker N
    const IntMatrix augmented = g_minus_1.hconcat(R);              // lift of (g - 1) M

    const AbelianGroupStructure h2 = lattice_quotient(fixed, norms);
    const AbelianGroupStructure h1 = lattice_quotient(kernel, augmented);

    CohomologyReport rep;
    rep.h1_invariants = invariants_of(h1);
    rep.h2_invariants = invariants_of(h2);
    rep.chi = chi_of(m.p(), h1, h2);
    rep.invariant_rank = lattice_quotient(fixed, R).free_rank;
    return rep;
}

namespace {

// Finite abelian group Z/d_1 x ... x Z/d_s, elements indexed in mixed radix.
struct FiniteModel {
    std::vector<std::int64_t> moduli;
    std::vector<std::vector<std::int64_t>> action;  // s x s, acting on coordinates
    std::int64_t size = 1;

    std::vector<std::int64_t> decode(std::int64_t idx) const {
        std::vector<std::int64_t> y(moduli.size());
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            y[i] = idx % moduli[i];
            idx /= moduli[i];
        }
        return y;
    }
    std::int64_t encode(const std::vector<std::int64_t>& y) const {
        std::int64_t idx = 0;
        for (std::size_t i = moduli.size(); i-- > 0;) {
            std::int64_t v = y[i] % moduli[i];
            if (v < 0) v += moduli[i];
            idx = idx * moduli[i] + v;
        }
        return idx;
    }
    std::int64_t add(std::int64_t a, std::int64_t b, std::int64_t sign) const {
        auto ya = decode(a), yb = decode(b);
        for (std::size_t i = 0; i < ya.size(); ++i) ya[i] += sign * yb[i];
        return encode(ya);
    }
    std::int64_t scale(std::int64_t a, std::int64_t k) const {
        auto y = decode(a);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = static_cast<std::int64_t>(static_cast<__int128>(y[i]) * k % moduli[i]);
        return encode(y);
    }
};

FiniteModel finite_model(const CyclicGModule& m, std::int64_t max_elements) {
    const std::size_t r = m.rank();
    const SmithForm s = smith_normal_form(m.relations());
    if (s.rank() < r) throw InvalidInput("brute force cohomology: module is infinite");
    Integer size = 1;
    for (std::size_t i = 0; i < r; ++i) size *= s.D(i, i);
    if (size > max_elements)
        throw InvalidInput("brute force cohomology: |M| = " + size.get_str() + " exceeds " +
                           std::to_string(max_elements));

    const IntMatrix t = s.U * m.action() * unimodular_inverse(s.U);
    std::vector<std::size_t> kept;
    FiniteModel f;
    for (std::size_t i = 0; i < r; ++i)
        if (s.D(i, i) != 1) {
            kept.push_back(i);
            f.moduli.push_back(s.D(i, i).get_si());
        }
    f.size = size.get_si();
    f.action.assign(kept.size(), std::vector<std::int64_t>(kept.size()));
    for (std::size_t a = 0; a < kept.size(); ++a)
        for (std::size_t b = 0; b < kept.size(); ++b) {
            Integer v = t(kept[a], kept[b]) % f.moduli[a];
            f.action[a][b] = v.get_si();
        }
    return f;
}

// Invariant factors of K / I for a subgroup I <= K of a finite group, from
// the counts |(K/I)[l^j]| = #{x in K : l^j x in I} / |I|.
std::vector<Integer> quotient_invariants(const FiniteModel& f, const std::vector<std::int64_t>& K,
                                         const std::vector<char>& in_I, std::int64_t size_I) {
    const std::int64_t h = static_cast<std::int64_t>(K.size()) / size_I;
    if (h == 1) return {};
    std::vector<std::vector<std::int64_t>> primary;  // per prime: descending prime powers
    for (const auto& [l_z, e] : factor(Integer(static_cast<long>(h)))) {
        const std::int64_t l = l_z.get_si();
        std::vector<std::int64_t> at_least;  // at_least[j-1] = number of cyclic factors of order >= l^j
        std::int64_t prev = 1, lj = 1, l_part = 1;
        for (unsigned i = 0; i < e; ++i) l_part *= l;
        for (;;) {
            lj *= l;
            std::int64_t hits = 0;
            for (std::int64_t x : K)
                if (in_I[static_cast<std::size_t>(f.scale(x, lj))]) ++hits;
            const std::int64_t count = hits / size_I;
            std::int64_t ratio = count / prev, n = 0;
            while (ratio > 1) {
                ratio /= l;
                ++n;
            }
            if (n == 0) break;
            at_least.push_back(n);
            prev = count;
            if (count == l_part) break;
        }
        std::vector<std::int64_t> powers;
        for (std::size_t j = 0; j < at_least.size(); ++j) {
            const std::int64_t exact = at_least[j] - (j + 1 < at_least.size() ? at_least[j + 1] : 0);
            std::int64_t q = 1;
            for (std::size_t t = 0; t <= j; ++t) q *= l;
            powers.insert(powers.end(), exact, q);
        }
        std::sort(powers.rbegin(), powers.rend());
        primary.push_back(std::move(powers));
    }
    std::size_t width = 0;
    for (const auto& p : primary) width = std::max(width, p.size());
    std::vector<Integer> inv(width, Integer(1));
    for (const auto& p : primary)
        for (std::size_t i = 0; i < p.size(); ++i) inv[i] *= p[i];
    std::reverse(inv.begin(), inv.end());
    return inv;
}

}  // namespace

CohomologyReport brute_force_cohomology(const CyclicGModule& m, std::int64_t max_elements) {
    const FiniteModel f = finite_model(m, max_elements);
    const std::size_t n = static_cast<std::size_t>(f.size);
    const std::size_t s = f.moduli.size();

    std::vector<std::int64_t> act(n);
    for (std::size_t x = 0; x < n; ++x) {
        const auto y = f.decode(static_cast<std::int64_t>(x));
        std::vector<std::int64_t> z(s, 0);
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t b = 0; b < s; ++b) z[a] = (z[a] + f.action[a][b] * y[b]) % f.moduli[a];
        act[x] = f.encode(z);
    }
    std::vector<std::int64_t> norm(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::int64_t acc = 0, cur = static_cast<std::int64_t>(x);
        for (std::int64_t i = 0; i < m.group_order(); ++i) {
            acc = f.add(acc, cur, 1);
            cur = act[static_cast<std::size_t>(cur)];
        }
        norm[x] = acc;
    }

    std::vector<std::int64_t> fixed, kernel;
    std::vector<char> in_norm_image(n, 0), in_aug(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        const auto xi = static_cast<std::int64_t>(x);
        if (act[x] == xi) fixed.push_back(xi);
        if (norm[x] == 0) kernel.push_back(xi);
        in_norm_image[static_cast<std::size_t>(norm[x])] = 1;
        in_aug[static_cast<std::size_t>(f.add(act[x], xi, -1))] = 1;
    }
    const auto count = [](const std::vector<char>& v) {
        return static_cast<std::int64_t>(std::count(v.begin(), v.end(), 1));
    };

    CohomologyReport rep;
    rep.h2_invariants = quotient_invariants(f, fixed, in_norm_image, count(in_norm_image));
    rep.h1_invariants = quotient_invariants(f, kernel, in_aug, count(in_aug));
    auto exponent = [&](const std::vector<Integer>& inv) {
        long e = 0;
        for (const auto& d : inv) e += static_cast<long>(ord_p(d, m.p()));
        return e;
    };
    rep.chi = exponent(rep.h2_invariants) - exponent(rep.h1_invariants);
    rep.invariant_rank = 0;
    return rep;
}

CyclicGModule indecomposable_module(int p, IndecomposableKind kind) {
    if (!is_prime(p)) throw InvalidInput("indecomposable_module: p = " + std::to_string(p) + " is not prime");
    const auto up = static_cast<std::size_t>(p);
    switch (kind) {
        case IndecomposableKind::trivial:
            return CyclicGModule(p, p, IntMatrix(1, 0), IntMatrix::identity(1));
        case IndecomposableKind::regular: {
            IntMatrix a(up, up);
            for (std::size_t j = 0; j < up; ++j) a((j + 1) % up, j) = 1;
            return CyclicGModule(p, p, IntMatrix(up, 0), a);
        }
        case IndecomposableKind::augmentation: {
            // v_i = g^i - 1, g v_i = v_{i+1} - v_1 with v_p = 0
            const std::size_t r = up - 1;
            IntMatrix a(r, r);
            for (std::size_t i = 0; i < r; ++i) {
                if (i + 1 < r) a(i + 1, i) += 1;
                a(0, i) -= 1;
            }
            return CyclicGModule(p, p, IntMatrix(r, 0), a);
        }
    }
    throw InvalidInput("unknown module kind");
}

CyclicGModule direct_sum(const CyclicGModule& a, const CyclicGModule& b) {
    if (a.p() != b.p() || a.group_order() != b.group_order())
        throw InvalidInput("direct_sum: modules over different groups");
    const std::size_t ra = a.rank(), rb = b.rank();
    const std::size_t ka = a.relations().cols(), kb = b.relations().cols();
    IntMatrix rel(ra + rb, ka + kb), act(ra + rb, ra + rb);
    for (std::size_t i = 0; i < ra; ++i) {
        for (std::size_t j = 0; j < ka; ++j) rel(i, j) = a.relations()(i, j);
        for (std::size_t j = 0; j < ra; ++j) act(i, j) = a.action()(i, j);
    }
    for (std::size_t i = 0; i < rb; ++i) {
        for (std::size_t j = 0; j < kb; ++j) rel(ra + i, ka + j) = b.relations()(i, j);
        for (std::size_t j = 0; j < rb; ++j) act(ra + i, ra + j) = b.action()(i, j);
    }
    return CyclicGModule(a.p(), a.group_order(), std::move(rel), std::move(act));
}

CyclicGModule dual_module(const CyclicGModule& m) {
    const std::size_t r = m.rank();
    const SmithForm s = smith_normal_form(m.relations());
    if (s.rank() < r) throw InvalidInput("dual_module: module is not finite");
    // square basis B of the relation lattice, then C = B^{-1} A B
    const IntMatrix B = (m.relations() * s.V).left_columns(r);
    const IntMatrix AB = m.action() * B;
    std::vector<std::vector<Rational>> aug(r, std::vector<Rational>(2 * r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            aug[i][j] = B(i, j);
            aug[i][r + j] = AB(i, j);
        }
    for (std::size_t c = 0; c < r; ++c) {
        std::size_t piv = c;
        while (aug[piv][c] == 0) ++piv;
        std::swap(aug[piv], aug[c]);
        const Rational inv = 1 / aug[c][c];
        for (auto& x : aug[c]) x *= inv;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            const Rational k = aug[i][c];
            for (std::size_t j = 0; j < 2 * r; ++j) aug[i][j] -= k * aug[c][j];
        }
    }
    IntMatrix C(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (aug[i][r + j].get_den() != 1) throw VerificationFailure("dual_module: conjugated action not integral");
            C(i, j) = aug[i][r + j].get_num();
        }
    return CyclicGModule(m.p(), m.group_order(), B.transpose(), C.transpose());
}

bool chi_additivity_check(const CyclicGModule& a, const CyclicGModule& b) {
    const auto ca = cohomology(a).chi, cb = cohomology(b).chi;
    if (!ca || !cb) throw InvalidInput("chi_additivity_check: chi undefined for a summand");
    const auto cs = cohomology(direct_sum(a, b)).chi;
    return cs && *cs == *ca + *cb;
}

}  // namespace iwasawa
