#include "akfock/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace akfock {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("multipartition needs at least one component");
}

Multipartition Multipartition::empty_of_level(int r) {
    if (r < 1) throw std::invalid_argument("level must be at least 1");
    return Multipartition(std::vector<Partition>(static_cast<std::size_t>(r)));
}

int Multipartition::size() const {
    int s = 0;
    for (const auto& p : components_) s += p.size();
    return s;
}

bool Multipartition::empty() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const Partition& p) { return p.empty(); });
}

Multipartition Multipartition::with_component(int j, Partition p) const {
    auto comps = components_;
    comps.at(static_cast<std::size_t>(j)) = std::move(p);
    return Multipartition(std::move(comps));
}

Multipartition Multipartition::tail() const {
    if (components_.size() < 2) throw std::invalid_argument("tail of a level-1 multipartition");
    return Multipartition(std::vector<Partition>(components_.begin() + 1, components_.end()));
}

Multipartition Multipartition::prefixed_empty() const {
    std::vector<Partition> comps;
    comps.reserve(components_.size() + 1);
    comps.emplace_back();
    comps.insert(comps.end(), components_.begin(), components_.end());
    return Multipartition(std::move(comps));
}

Multicharge::Multicharge(std::vector<int> entries_, int e_) : entries(std::move(entries_)), e(e_) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    if (entries.empty()) throw std::invalid_argument("multicharge needs at least one entry");
}

std::vector<int> Multicharge::residues() const {
    std::vector<int> out;
    out.reserve(entries.size());
    for (int a : entries) out.push_back(mod(a, e));
    return out;
}

Multicharge Multicharge::tail() const {
    if (entries.size() < 2) throw std::invalid_argument("tail of a level-1 multicharge");
    return Multicharge(std::vector<int>(entries.begin() + 1, entries.end()), e);
}

bool Multicharge::equivalent(const Multicharge& other) const {
    return e == other.e && residues() == other.residues();
}

int residue(const Node& node, const Multicharge& charge) {
    return mod(charge.entries.at(static_cast<std::size_t>(node.component)) + node.col - node.row,
               charge.e);
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(p.part(1)), 0);
    for (int part : p.parts())
        for (int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
    return Partition(std::move(out));
}

Multipartition conjugate(const Multipartition& m) {
    std::vector<Partition> comps;
    for (auto it = m.components().rbegin(); it != m.components().rend(); ++it)
        comps.push_back(conjugate(*it));
    return Multipartition(std::move(comps));
}

bool is_e_regular(const Partition& p, int e) {
    const auto& v = p.parts();
    for (std::size_t i = 0; i + static_cast<std::size_t>(e) <= v.size(); ++i)
        if (v[i] == v[i + static_cast<std::size_t>(e) - 1]) return false;
    return true;
}

bool is_e_restricted(const Partition& p, int e) {
    for (int b = 1; b <= p.length(); ++b)
        if (p.part(b) - p.part(b + 1) >= e) return false;
    return true;
}

bool is_e_multiregular(const Multipartition& m, int e) {
    return std::all_of(m.components().begin(), m.components().end(),
                       [e](const Partition& p) { return is_e_regular(p, e); });
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dominance needs partitions of equal size");
    int sa = 0, sb = 0;
    const int len = std::max(a.length(), b.length());
    for (int i = 1; i <= len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

bool dominates(const Multipartition& a, const Multipartition& b) {
    if (a.level() != b.level()) throw std::invalid_argument("dominance needs equal levels");
    if (a.size() != b.size()) throw std::invalid_argument("dominance needs equal sizes");
    int sa = 0, sb = 0;
    for (int j = 0; j < a.level(); ++j) {
        const int len = std::max(a[j].length(), b[j].length());
        for (int i = 1; i <= len; ++i) {
            sa += a[j].part(i);
            sb += b[j].part(i);
            if (sa < sb) return false;
        }
    }
    return true;
}

std::strong_ordering lex_compare(const Multipartition& a, const Multipartition& b) {
    if (a.level() != b.level()) throw std::invalid_argument("lexicographic comparison needs equal levels");
    return a <=> b;
}

bool fayers_order_geq(const Multipartition& a, const Multipartition& b) {
    if (a.level() != b.level()) throw std::invalid_argument("order needs equal levels");
    const int sa = a[0].size(), sb = b[0].size();
    if (sa != sb) return sa > sb;
    return dominates(a[0], b[0]);
}

bool fayers_order_greater(const Multipartition& a, const Multipartition& b) {
    return fayers_order_geq(a, b) && !fayers_order_geq(b, a);
}

std::vector<Ladder> ladders(const Partition& p, int e) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    std::map<int, Ladder> by_index;
    for (int b = 1; b <= p.length(); ++b) {
        for (int c = 1; c <= p.part(b); ++c) {
            const int l = b + (e - 1) * (c - 1);
            auto& lad = by_index[l];
            lad.index = l;
            lad.residue = mod(1 - l, e);
            ++lad.size;
            lad.nodes.push_back(Node{b, c, 0});
        }
    }
    std::vector<Ladder> out;
    out.reserve(by_index.size());
    for (auto& [l, lad] : by_index) out.push_back(std::move(lad));
    return out;
}

std::vector<Node> addable_nodes(const Multipartition& m) {
    std::vector<Node> out;
    for (int j = 0; j < m.level(); ++j) {
        const Partition& p = m[j];
        for (int b = 1; b <= p.length() + 1; ++b)
            if (b == 1 || p.part(b - 1) > p.part(b)) out.push_back(Node{b, p.part(b) + 1, j});
    }
    return out;
}

std::vector<Node> removable_nodes(const Multipartition& m) {
    std::vector<Node> out;
    for (int j = 0; j < m.level(); ++j) {
        const Partition& p = m[j];
        for (int b = 1; b <= p.length(); ++b)
            if (p.part(b) > p.part(b + 1)) out.push_back(Node{b, p.part(b), j});
    }
    return out;
}

namespace {

std::vector<Node> filter_residue(std::vector<Node> nodes, int i, const Multicharge& charge) {
    std::erase_if(nodes, [&](const Node& n) { return residue(n, charge) != mod(i, charge.e); });
    return nodes;
}

void check_level(const Multipartition& m, const Multicharge& charge) {
    if (m.level() != charge.level())
        throw std::invalid_argument("multipartition level " + std::to_string(m.level()) +
                                    " does not match multicharge level " +
                                    std::to_string(charge.level()));
}

}  // namespace

std::vector<Node> addable_nodes(const Multipartition& m, int i, const Multicharge& charge) {
    check_level(m, charge);
    return filter_residue(addable_nodes(m), i, charge);
}

std::vector<Node> removable_nodes(const Multipartition& m, int i, const Multicharge& charge) {
    check_level(m, charge);
    return filter_residue(removable_nodes(m), i, charge);
}

bool is_below(const Node& lower, const Node& upper) {
    return lower.component > upper.component ||
           (lower.component == upper.component && lower.row > upper.row);
}

Signature i_signature_reduced(const Multipartition& m, int i, const Multicharge& charge) {
    Signature sig;
    std::vector<std::pair<Node, char>> entries;
    for (const auto& n : addable_nodes(m, i, charge)) entries.emplace_back(n, '+');
    for (const auto& n : removable_nodes(m, i, charge)) entries.emplace_back(n, '-');
    // lowest first
    std::sort(entries.begin(), entries.end(),
              [](const auto& x, const auto& y) { return is_below(x.first, y.first); });

    std::vector<bool> alive(entries.size(), true);
    std::vector<std::size_t> open;
    for (std::size_t t = 0; t < entries.size(); ++t) {
        sig.nodes.push_back(entries[t].first);
        sig.raw.push_back(entries[t].second);
        if (entries[t].second == '-') {
            open.push_back(t);
        } else if (!open.empty()) {
            alive[open.back()] = false;
            alive[t] = false;
            open.pop_back();
        }
    }
    for (std::size_t t = 0; t < entries.size(); ++t) {
        if (!alive[t]) continue;
        sig.reduced.push_back(entries[t].second);
        if (entries[t].second == '-' && !sig.good_node) sig.good_node = entries[t].first;
    }
    return sig;
}

Multipartition add_nodes(const Multipartition& m, const std::vector<Node>& nodes) {
    std::vector<std::vector<int>> comps;
    for (const auto& p : m.components()) comps.push_back(p.parts());
    // Rows must be filled top to bottom within each column, so process
    // nodes so that each is addable at the moment it is added.
    std::vector<Node> sorted = nodes;
    std::sort(sorted.begin(), sorted.end(), [](const Node& a, const Node& b) {
        return std::tie(a.component, a.col, a.row) < std::tie(b.component, b.col, b.row);
    });
    for (const auto& n : sorted) {
        auto& parts = comps.at(static_cast<std::size_t>(n.component));
        const auto row = static_cast<std::size_t>(n.row - 1);
        if (row > parts.size()) throw std::invalid_argument("node " + to_string(n) + " is not addable");
        if (row == parts.size()) parts.push_back(0);
        if (parts[row] != n.col - 1 || (row > 0 && parts[row - 1] < n.col))
            throw std::invalid_argument("node " + to_string(n) + " is not addable");
        parts[row] = n.col;
    }
    std::vector<Partition> out;
    for (auto& parts : comps) out.emplace_back(std::move(parts));
    return Multipartition(std::move(out));
}

Multipartition remove_node(const Multipartition& m, const Node& node) {
    const Partition& p = m[node.component];
    if (node.row < 1 || node.row > p.length() || p.part(node.row) != node.col ||
        p.part(node.row + 1) >= node.col)
        throw std::invalid_argument("node " + to_string(node) + " is not removable");
    auto parts = p.parts();
    --parts[static_cast<std::size_t>(node.row - 1)];
    return m.with_component(node.component, Partition(std::move(parts)));
}

DualKleshchevResult is_dual_kleshchev(const Multipartition& m, const Multicharge& charge) {
    check_level(m, charge);
    DualKleshchevResult result;
    Multipartition cur = m;
    while (!cur.empty()) {
        bool removed = false;
        for (int i = 0; i < charge.e && !removed; ++i) {
            const auto sig = i_signature_reduced(cur, i, charge);
            if (sig.good_node) {
                result.witness.push_back(GoodNodeRemoval{i, *sig.good_node});
                cur = remove_node(cur, *sig.good_node);
                removed = true;
            }
        }
        if (!removed) {
            result.witness.clear();
            return result;
        }
    }
    result.is_dual_kleshchev = true;
    return result;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("negative partition size");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Multipartition> multipartitions_of(int n, int r) {
    if (r < 1) throw std::invalid_argument("level must be at least 1");
    std::vector<std::vector<Partition>> by_size;
    for (int s = 0; s <= n; ++s) by_size.push_back(partitions_of(s));
    std::vector<Multipartition> out;
    std::vector<Partition> cur;
    std::function<void(int, int)> rec = [&](int j, int remaining) {
        if (j == r - 1) {
            for (const auto& p : by_size[static_cast<std::size_t>(remaining)]) {
                cur.push_back(p);
                out.emplace_back(cur);
                cur.pop_back();
            }
            return;
        }
        for (int s = remaining; s >= 0; --s) {
            for (const auto& p : by_size[static_cast<std::size_t>(s)]) {
                cur.push_back(p);
                rec(j + 1, remaining - s);
                cur.pop_back();
            }
        }
    };
    rec(0, n);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::string to_string(const Partition& p) {
    if (p.empty()) return "∅";
    std::string s = "(";
    for (int b = 1; b <= p.length(); ++b) {
        if (b > 1) s += ",";
        s += std::to_string(p.part(b));
    }
    return s + ")";
}

std::string to_string(const Multipartition& m) {
    std::string s = "(";
    for (int j = 0; j < m.level(); ++j) {
        if (j > 0) s += ",";
        s += to_string(m[j]);
    }
    return s + ")";
}

std::string to_string(const Node& n) {
    return "(" + std::to_string(n.row) + "," + std::to_string(n.col) + "," +
           std::to_string(n.component + 1) + ")";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const Multipartition& m) { return os << to_string(m); }
std::ostream& operator<<(std::ostream& os, const Node& n) { return os << to_string(n); }

}  // namespace akfock
