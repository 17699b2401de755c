#pragma once

// Sparse vectors in the level-r Fock space and the divided-power action of
// the f_i generators.

#include <functional>
#include <map>
#include <string>

#include "akfock/laurent.hpp"
#include "akfock/partition.hpp"
#include "akfock/word.hpp"

namespace akfock {

class FockVector {
public:
    /// Terms iterate in descending lexicographic order of labels.
    using TermMap = std::map<Multipartition, LaurentPoly, std::greater<>>;

    explicit FockVector(Multicharge charge) : charge_(std::move(charge)) {}
    /// The single basis vector `label` with coefficient 1.
    static FockVector basis(Multipartition label, Multicharge charge);

    const Multicharge& charge() const { return charge_; }
    int e() const { return charge_.e; }
    int level() const { return charge_.level(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of `label` (zero when absent).
    LaurentPoly coeff(const Multipartition& label) const;
    /// Adds c * label; entries that cancel are erased.
    void add_term(const Multipartition& label, const LaurentPoly& c);

    FockVector& operator+=(const FockVector& other);
    FockVector& operator-=(const FockVector& other);
    /// Multiplies every coefficient by p.
    FockVector scaled(const LaurentPoly& p) const;

    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.charge_.e == b.charge_.e && a.charge_.entries == b.charge_.entries &&
               a.terms_ == b.terms_;
    }

private:
    void check_compatible(const FockVector& other) const;

    Multicharge charge_;
    TermMap terms_;
};

/// N_i(λ, ξ) computed from its definition. Throws std::invalid_argument
/// unless ξ arises from λ by adding at least one addable i-node.
int n_coefficient(const Multipartition& lambda, const Multipartition& xi, int i,
                  const Multicharge& charge);

/// The same integer assembled component by component: contributions from
/// the added node's own component plus, for every earlier component, the
/// net count of addable i-nodes of ξ minus removable i-nodes of λ.
int n_coefficient_by_components(const Multipartition& lambda, const Multipartition& xi, int i,
                                const Multicharge& charge);

/// f_i^(m) applied to v.
FockVector apply_f(const FockVector& v, int i, int m);

/// Applies the factors of w from the back to the front.
FockVector apply_word(const FockVector& v, const OperatorWord& w);

/// Word over e+1 residues obtained by inserting the column d: residues
/// below d are kept, residues above d shift up by one, and each factor of
/// residue d becomes the pair F_d F_{d+1} (F_{d+1} acts first).
OperatorWord translate_word(const OperatorWord& w, int d);

/// The ladder word of a partition for the level-1 charge s1: one factor
/// f_{i_k}^{(m_k)} per non-empty ladder, rightmost = lowest ladder.
OperatorWord ladder_word(const Partition& p, int e, int s1);

std::string to_string(const FockVector& v);

}  // namespace akfock
