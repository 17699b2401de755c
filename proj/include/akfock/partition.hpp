#pragma once

// Partitions, multipartitions, nodes and residues, together with the orders
// and the good-node machinery used to index canonical basis vectors.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace akfock {

/// Nonnegative remainder of `a` modulo `m` (m > 0).
constexpr int mod(int a, int m) {
    const int r = a % m;
    return r < 0 ? r + m : r;
}

/// Floor division, rounding toward negative infinity (m > 0).
constexpr int floor_div(int a, int m) {
    return a >= 0 ? a / m : -((-a + m - 1) / m);
}

/// A weakly decreasing sequence of positive integers, stored without
/// trailing zeros. The empty partition is the empty sequence.
class Partition {
public:
    Partition() = default;
    /// Trailing zeros are dropped; anything else that is not weakly
    /// decreasing and nonnegative throws std::invalid_argument.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    /// Number of nonzero parts.
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; rows beyond the length read as zero.
    int part(int row) const {
        return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
    }

    /// Lexicographic on the part sequence. For partitions of the same size
    /// this is the lexicographic order; a shorter prefix compares lower.
    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// An ordered r-tuple of partitions, r >= 1.
class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> components);
    Multipartition(std::initializer_list<Partition> components)
        : Multipartition(std::vector<Partition>(components)) {}

    /// The empty multipartition with r components.
    static Multipartition empty_of_level(int r);

    int level() const { return static_cast<int>(components_.size()); }
    int size() const;
    bool empty() const;

    /// 0-based component access.
    const Partition& operator[](int j) const { return components_[static_cast<std::size_t>(j)]; }
    const std::vector<Partition>& components() const { return components_; }

    /// Replaces component j (0-based), returning the new multipartition.
    Multipartition with_component(int j, Partition p) const;

    /// (λ^(2), ..., λ^(r)).
    Multipartition tail() const;
    /// (∅, λ^(1), ..., λ^(r)).
    Multipartition prefixed_empty() const;

    /// Lexicographic order: first differing component, then first
    /// differing part.
    friend auto operator<=>(const Multipartition&, const Multipartition&) = default;
    friend bool operator==(const Multipartition&, const Multipartition&) = default;

private:
    std::vector<Partition> components_;
};

/// A node (row, col) of component `component`; row and col are 1-based,
/// the component index is 0-based.
struct Node {
    int row = 1;
    int col = 1;
    int component = 0;

    friend auto operator<=>(const Node&, const Node&) = default;
    friend bool operator==(const Node&, const Node&) = default;
};

/// An r-tuple of integers together with the quantum characteristic e.
struct Multicharge {
    std::vector<int> entries;
    int e = 2;

    Multicharge() = default;
    Multicharge(std::vector<int> entries_, int e_);

    int level() const { return static_cast<int>(entries.size()); }
    int residue(int j) const { return mod(entries[static_cast<std::size_t>(j)], e); }
    /// Entries reduced into {0, ..., e-1}.
    std::vector<int> residues() const;
    /// Drops the first entry.
    Multicharge tail() const;
    /// Same modulus and same residues.
    bool equivalent(const Multicharge& other) const;
};

/// (a_j + c - b) mod e for the node (b, c, j).
int residue(const Node& node, const Multicharge& charge);

Partition conjugate(const Partition& p);
/// (λ^(r)', ..., λ^(1)').
Multipartition conjugate(const Multipartition& m);

bool is_e_regular(const Partition& p, int e);
bool is_e_restricted(const Partition& p, int e);
bool is_e_multiregular(const Multipartition& m, int e);

/// Dominance of partitions of the same size.
bool dominates(const Partition& a, const Partition& b);
/// Dominance of multipartitions via the componentwise running sums.
/// Throws std::invalid_argument on mismatched size or level.
bool dominates(const Multipartition& a, const Multipartition& b);

/// Lexicographic comparison (total order).
std::strong_ordering lex_compare(const Multipartition& a, const Multipartition& b);

/// The order used to drive the level-r recursion: a ≽ b iff
/// |a^(1)| > |b^(1)|, or the first components have equal size and
/// a^(1) dominates b^(1).
bool fayers_order_geq(const Multipartition& a, const Multipartition& b);
/// a ≽ b and not b ≽ a.
bool fayers_order_greater(const Multipartition& a, const Multipartition& b);

/// The nodes (b, c) of a partition with b + (e-1)(c-1) = index.
struct Ladder {
    int index = 1;
    int size = 0;
    /// (1 - index) mod e, i.e. the residue for a zero charge.
    int residue = 0;
    std::vector<Node> nodes;
};

/// Non-empty ladders of p in increasing index order.
std::vector<Ladder> ladders(const Partition& p, int e);

/// Addable (resp. removable) nodes of residue i, sorted from highest to
/// lowest: component ascending, then row ascending.
std::vector<Node> addable_nodes(const Multipartition& m, int i, const Multicharge& charge);
std::vector<Node> removable_nodes(const Multipartition& m, int i, const Multicharge& charge);
/// All addable / removable nodes regardless of residue, same order.
std::vector<Node> addable_nodes(const Multipartition& m);
std::vector<Node> removable_nodes(const Multipartition& m);

/// True when `lower` lies below `upper`: a later component, or the same
/// component and a later row.
bool is_below(const Node& lower, const Node& upper);

struct Signature {
    /// Addable/removable i-nodes from lowest to highest.
    std::vector<Node> nodes;
    /// '+' for addable, '-' for removable, aligned with `nodes`.
    std::string raw;
    /// After cancelling all adjacent "-+" pairs.
    std::string reduced;
    /// Lowest '-' surviving in the reduced signature.
    std::optional<Node> good_node;
};

Signature i_signature_reduced(const Multipartition& m, int i, const Multicharge& charge);

struct GoodNodeRemoval {
    int residue = 0;
    Node node;
};

struct DualKleshchevResult {
    bool is_dual_kleshchev = false;
    /// Good nodes removed, in removal order (only meaningful when true).
    std::vector<GoodNodeRemoval> witness;
};

/// Repeatedly removes a good node, trying residues 0..e-1 in order.
DualKleshchevResult is_dual_kleshchev(const Multipartition& m, const Multicharge& charge);

/// Multipartition obtained by adding (resp. removing) the given nodes.
Multipartition add_nodes(const Multipartition& m, const std::vector<Node>& nodes);
Multipartition remove_node(const Multipartition& m, const Node& node);

/// All partitions of n, lexicographically descending.
std::vector<Partition> partitions_of(int n);
/// All r-multipartitions of n, lexicographically descending.
std::vector<Multipartition> multipartitions_of(int n, int r);

std::string to_string(const Partition& p);
std::string to_string(const Multipartition& m);
std::string to_string(const Node& n);
std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const Multipartition& m);
std::ostream& operator<<(std::ostream& os, const Node& n);

}  // namespace akfock
