#pragma once

// Runner addition applied to whole Fock vectors, and the comparisons of
// canonical bases at e and e+1.

#include <optional>
#include <string>
#include <vector>

#include "akfock/abacus.hpp"
#include "akfock/canonical_basis.hpp"

namespace akfock {

struct TermDiff {
    /// Label at e+1.
    Multipartition label;
    LaurentPoly lhs;
    LaurentPoly rhs;
};

struct RunnerReport {
    enum class Kind { FullRunner, EmptyRunner };

    Kind kind = Kind::FullRunner;
    Multipartition mu;
    /// μ after runner insertion.
    Multipartition image;
    Multicharge charge;
    /// Multicharge at e+1 (bead counts after insertion).
    Multicharge image_charge;
    std::vector<int> beads;
    std::vector<int> k;
    int d = 0;
    /// G_{e+1} at the image label.
    FockVector lhs;
    /// G_e(μ) with runner insertion applied termwise.
    FockVector rhs;
    bool equal = false;
    std::vector<TermDiff> diffs;
    /// Labels of lhs outside the image of rhs (empty-runner comparisons only
    /// look at image labels; these are reported for information).
    std::vector<Multipartition> extra_labels;

    int e() const { return charge.e; }
    /// One human-readable line.
    std::string summary() const;
};

/// Relabels every term through the full-runner insertion. The vector's
/// multicharge must agree with the bead counts modulo e. Throws
/// std::logic_error if two labels collide.
FockVector plus_k_vector(const FockVector& v, const std::vector<int>& beads, const std::vector<int>& k);

/// Same for the empty-runner insertion at column d.
FockVector plus_empty_vector(const FockVector& v, const std::vector<int>& beads, int d);

/// Computes both sides of the full-runner identity. With no k, uses
/// suggest_min_k. Throws std::invalid_argument if k fails
/// check_k_conditions or the congruence condition.
RunnerReport verify_full_runner(const Multipartition& mu, const Multicharge& charge,
                                const std::optional<std::vector<int>>& k, BasisCache& cache,
                                const BasisOptions& opts = {});

/// Compares G_e(μ) with G_{e+1}(μ^{+∅}) on image labels. An inequality is
/// reported in the result, never thrown. With `lambda`, only that row is
/// compared.
RunnerReport verify_empty_runner(const Multipartition& mu, const std::optional<Multipartition>& lambda,
                                 const Multicharge& charge, int d, BasisCache& cache,
                                 const BasisOptions& opts = {});

/// For μ = (∅, μ^(2), ...): checks G_{e+1}((∅^{+k1}, rest^{+k})) against
/// G_{e+1}((∅, rest^{+k})) under (∅, λ) ↦ (∅^{+k1}, λ).
bool verify_empty_runner_prefix(const Multipartition& mu, const Multicharge& charge,
                                const std::vector<int>& k, BasisCache& cache);

}  // namespace akfock
