#pragma once

// Canonical basis vectors G^s(μ) for e-multiregular μ: the level-1 LLT
// algorithm and the level-r recursion on the first component.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "akfock/fock.hpp"

namespace akfock {

struct CanonicalBasisVector {
    Multipartition mu;
    FockVector vector;
    /// Set when some coefficient has a negative integer in it. This is not
    /// an error, only something worth reporting.
    bool has_negative_coefficient = false;

    /// Builds and checks: coefficient 1 at mu, every other coefficient in
    /// vZ[v], every label dominated by mu. Throws std::logic_error otherwise.
    static CanonicalBasisVector validated(Multipartition mu, FockVector vector);
};

/// Thread-safe memo of canonical basis vectors keyed by
/// (e, multicharge residues, μ). Entries are re-validated on insert.
class BasisCache {
public:
    std::optional<CanonicalBasisVector> find(const Multicharge& charge, const Multipartition& mu) const;
    void insert(const Multicharge& charge, const CanonicalBasisVector& g);
    std::size_t size() const;
    void clear();

private:
    using Key = std::tuple<int, std::vector<int>, Multipartition>;
    mutable std::shared_mutex mutex_;
    std::map<Key, CanonicalBasisVector> entries_;
};

struct Subtraction {
    Multipartition nu;
    LaurentPoly alpha;
};

struct StripResult {
    CanonicalBasisVector g;
    std::vector<Subtraction> log;
};

struct BasisOptions {
    /// Re-check bar invariance of every alpha and the coefficient classes
    /// after every subtraction.
    bool paranoid = false;
};

/// Level-1 LLT: ladder word on the empty partition, then removal of lower
/// canonical vectors until the off-lead coefficients lie in vZ[v]. Uses its
/// own memo, independent of BasisCache.
CanonicalBasisVector llt_level1(const Partition& mu, int e, int s1);

/// G^{s_-}(ν) ↦ Σ d_{ν μ}(v) (∅, ν): the vector for (∅, μ) at charge (s1, s_-).
CanonicalBasisVector embed_component(const CanonicalBasisVector& g, int s1);

/// Subtracts α·G(ν) for offending labels ν in descending lexicographic
/// order (the greatest offender is always dominance-maximal). `a` must have
/// coefficient 1 at mu and mu must be greater than every other label in
/// the recursion order.
StripResult strip_lower(const FockVector& a, const Multipartition& mu, BasisCache& cache,
                        const BasisOptions& opts = {});

/// G^s(μ) for e-multiregular μ (throws std::invalid_argument otherwise).
CanonicalBasisVector fayers_canonical_basis(const Multipartition& mu, const Multicharge& charge,
                                            BasisCache& cache, const BasisOptions& opts = {});

/// As above, also returning the subtraction log of the final step.
StripResult fayers_canonical_basis_traced(const Multipartition& mu, const Multicharge& charge,
                                          BasisCache& cache, const BasisOptions& opts = {});

/// The vector A(μ): ladder word of μ^(1) applied to G^s(μ₀), where μ₀
/// replaces the first component with ∅.
FockVector fayers_a_vector(const Multipartition& mu, const Multicharge& charge, BasisCache& cache,
                           const BasisOptions& opts = {});

struct DecompositionMatrix {
    Multicharge charge;
    /// All r-multipartitions of n, descending lexicographic.
    std::vector<Multipartition> rows;
    /// Multiregular (optionally dual Kleshchev) labels, descending lexicographic.
    std::vector<Multipartition> columns;
    /// entries[row][col] = d_{λμ}(v).
    std::vector<std::vector<LaurentPoly>> entries;
};

DecompositionMatrix decomposition_matrix(int n, const Multicharge& charge, bool dual_kleshchev_only,
                                         BasisCache& cache, int jobs = 1, const BasisOptions& opts = {});

/// Entries evaluated at v = 1.
std::vector<std::vector<LaurentPoly::Coeff>> evaluate_at_1(const DecompositionMatrix& m);

}  // namespace akfock
