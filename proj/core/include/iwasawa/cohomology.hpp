#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwasawa/int_matrix.hpp"

namespace iwasawa {

/// M = Z^r / (column span of `relations`), with a fixed generator g of the
/// cyclic group G of order p^k acting through the r x r matrix `action`.
/// The constructor checks that the action preserves the relation lattice and
/// that action^{|G|} is the identity on M.
class CyclicGModule {
public:
    CyclicGModule(int p, std::int64_t group_order, IntMatrix relations, IntMatrix action);

    int p() const { return p_; }
    std::int64_t group_order() const { return order_; }
    std::size_t rank() const { return action_.rows(); }  // number of generators r
    const IntMatrix& relations() const { return relations_; }
    const IntMatrix& action() const { return action_; }

    /// Abelian group structure of M itself.
    AbelianGroupStructure structure() const;
    bool is_finite() const { return structure().finite(); }

private:
    int p_;
    std::int64_t order_;
    IntMatrix relations_;
    IntMatrix action_;
};

struct CohomologyReport {
    // Elementary divisors in increasing divisibility order, 1s dropped, one
    // trailing 0 per free Z summand.
    std::vector<Integer> h1_invariants;
    std::vector<Integer> h2_invariants;
    /// ord_p|H^2| - ord_p|H^1|, defined iff both groups are finite.
    std::optional<long> chi;
    /// Z-rank of M^G.
    std::size_t invariant_rank = 0;

    friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};

enum class IndecomposableKind { trivial, regular, augmentation };

std::string to_string(IndecomposableKind kind);
IndecomposableKind parse_indecomposable_kind(const std::string& name);

/// 1 + g + ... + g^{|G|-1} as an r x r matrix.
IntMatrix norm_element_matrix(const CyclicGModule& m);

/// H^2 = M^G / N M and H^1 = ker N / (g - 1) M, computed on lifts to Z^r.
CohomologyReport cohomology(const CyclicGModule& m);

/// Enumeration oracle for finite M with |M| <= max_elements.
CohomologyReport brute_force_cohomology(const CyclicGModule& m, std::int64_t max_elements = 1'000'000);

/// Z (trivial action), the regular module Z[G] (cyclic permutation of the
/// group elements), and the augmentation ideal in the basis g^i - 1,
/// i = 1..p-1. Group order p.
CyclicGModule indecomposable_module(int p, IndecomposableKind kind);

CyclicGModule direct_sum(const CyclicGModule& a, const CyclicGModule& b);

/// Pontryagin dual Hom(M, Q/Z) of a finite module, presented with the
/// transposed action.
CyclicGModule dual_module(const CyclicGModule& m);

/// chi(A + B) == chi(A) + chi(B); both chi must be defined.
bool chi_additivity_check(const CyclicGModule& a, const CyclicGModule& b);

}  // namespace iwasawa
