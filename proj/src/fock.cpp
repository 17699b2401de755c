#include "akfock/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace akfock {

std::string to_string(const OperatorWord& w) {
    std::string s;
    for (const auto& f : w.factors) {
        if (!s.empty()) s += " ";
        s += "f" + std::to_string(f.residue);
        if (f.power != 1) s += "^(" + std::to_string(f.power) + ")";
    }
    return s.empty() ? "1" : s;
}

FockVector FockVector::basis(Multipartition label, Multicharge charge) {
    FockVector v(std::move(charge));
    v.add_term(label, LaurentPoly(1));
    return v;
}

LaurentPoly FockVector::coeff(const Multipartition& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? LaurentPoly{} : it->second;
}

void FockVector::add_term(const Multipartition& label, const LaurentPoly& c) {
    if (c.is_zero()) return;
    if (label.level() != level())
        throw std::invalid_argument("label " + to_string(label) + " has the wrong number of components");
    auto [it, inserted] = terms_.try_emplace(label, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FockVector::check_compatible(const FockVector& other) const {
    if (charge_.e != other.charge_.e || charge_.entries != other.charge_.entries)
        throw std::invalid_argument("Fock vectors have different moduli or multicharges");
}

FockVector& FockVector::operator+=(const FockVector& other) {
    check_compatible(other);
    for (const auto& [label, c] : other.terms_) add_term(label, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
    check_compatible(other);
    for (const auto& [label, c] : other.terms_) add_term(label, -c);
    return *this;
}

FockVector FockVector::scaled(const LaurentPoly& p) const {
    FockVector out(charge_);
    if (p.is_zero()) return out;
    for (const auto& [label, c] : terms_) out.add_term(label, c * p);
    return out;
}

namespace {

// Nodes of xi not in lambda, or throws if xi does not contain lambda.
std::vector<Node> added_nodes(const Multipartition& lambda, const Multipartition& xi) {
    if (lambda.level() != xi.level()) throw std::invalid_argument("levels differ");
    std::vector<Node> out;
    for (int j = 0; j < xi.level(); ++j) {
        const int len = std::max(lambda[j].length(), xi[j].length());
        for (int b = 1; b <= len; ++b) {
            if (xi[j].part(b) < lambda[j].part(b))
                throw std::invalid_argument(to_string(xi) + " does not contain " + to_string(lambda));
            for (int c = lambda[j].part(b) + 1; c <= xi[j].part(b); ++c) out.push_back(Node{b, c, j});
        }
    }
    return out;
}

void check_extension(const Multipartition& lambda, const Multipartition& xi, int i,
                     const Multicharge& charge, const std::vector<Node>& added) {
    if (added.empty()) throw std::invalid_argument("no nodes were added");
    const auto addable = addable_nodes(lambda, i, charge);
    for (const auto& n : added)
        if (std::find(addable.begin(), addable.end(), n) == addable.end())
            throw std::invalid_argument(to_string(xi) + " is not obtained from " + to_string(lambda) +
                                        " by adding addable " + std::to_string(i) + "-nodes");
}

}  // namespace

int n_coefficient(const Multipartition& lambda, const Multipartition& xi, int i,
                  const Multicharge& charge) {
    const auto added = added_nodes(lambda, xi);
    check_extension(lambda, xi, i, charge, added);
    const auto addable_xi = addable_nodes(xi, i, charge);
    const auto removable_la = removable_nodes(lambda, i, charge);
    int total = 0;
    for (const auto& n : added) {
        for (const auto& a : addable_xi)
            if (is_below(n, a)) ++total;
        for (const auto& r : removable_la)
            if (is_below(n, r)) --total;
    }
    return total;
}

int n_coefficient_by_components(const Multipartition& lambda, const Multipartition& xi, int i,
                                const Multicharge& charge) {
    const auto added = added_nodes(lambda, xi);
    check_extension(lambda, xi, i, charge, added);
    // Net count for each whole component.
    std::vector<int> whole(static_cast<std::size_t>(xi.level()), 0);
    for (int j = 0; j < xi.level(); ++j) {
        const Multicharge cj({charge.entries[static_cast<std::size_t>(j)]}, charge.e);
        const Multipartition xj{xi[j]}, lj{lambda[j]};
        whole[static_cast<std::size_t>(j)] = static_cast<int>(addable_nodes(xj, i, cj).size()) -
                                             static_cast<int>(removable_nodes(lj, i, cj).size());
    }
    int total = 0;
    for (const auto& n : added) {
        const int J = n.component;
        const Multicharge cj({charge.entries[static_cast<std::size_t>(J)]}, charge.e);
        const Node local{n.row, n.col, 0};
        for (const auto& a : addable_nodes(Multipartition{xi[J]}, i, cj))
            if (is_below(local, a)) ++total;
        for (const auto& r : removable_nodes(Multipartition{lambda[J]}, i, cj))
            if (is_below(local, r)) --total;
        for (int j = 0; j < J; ++j) total += whole[static_cast<std::size_t>(j)];
    }
    return total;
}

FockVector apply_f(const FockVector& v, int i, int m) {
    if (m < 1) throw std::invalid_argument("divided power must be at least 1");
    const Multicharge& charge = v.charge();
    i = mod(i, charge.e);
    FockVector out(charge);
    for (const auto& [lambda, c] : v.terms()) {
        const auto addable = addable_nodes(lambda, i, charge);
        const int na = static_cast<int>(addable.size());
        if (m > na) continue;
        const auto removable = removable_nodes(lambda, i, charge);
        // Adding i-nodes neither creates addable i-nodes nor destroys
        // removable ones, so the addable i-nodes of ξ above the t-th chosen
        // node (index idx_t) are the unchosen ones before it: idx_t - t.
        std::vector<int> rem_above(static_cast<std::size_t>(na), 0);
        for (int a = 0; a < na; ++a)
            for (const auto& r : removable)
                if (is_below(addable[static_cast<std::size_t>(a)], r)) ++rem_above[static_cast<std::size_t>(a)];

        std::vector<int> idx(static_cast<std::size_t>(m));
        for (int t = 0; t < m; ++t) idx[static_cast<std::size_t>(t)] = t;
        std::vector<Node> chosen(static_cast<std::size_t>(m));
        while (true) {
            int n_exp = 0;
            for (int t = 0; t < m; ++t) {
                const int a = idx[static_cast<std::size_t>(t)];
                n_exp += a - t - rem_above[static_cast<std::size_t>(a)];
                chosen[static_cast<std::size_t>(t)] = addable[static_cast<std::size_t>(a)];
            }
            out.add_term(add_nodes(lambda, chosen), c.shifted(n_exp));
            int t = m - 1;
            while (t >= 0 && idx[static_cast<std::size_t>(t)] == na - m + t) --t;
            if (t < 0) break;
            ++idx[static_cast<std::size_t>(t)];
            for (int u = t + 1; u < m; ++u) idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
        }
    }
    return out;
}

FockVector apply_word(const FockVector& v, const OperatorWord& w) {
    if (w.modulus != v.e())
        throw std::invalid_argument("operator word is over residues mod " + std::to_string(w.modulus) +
                                    " but the vector has e = " + std::to_string(v.e()));
    FockVector cur = v;
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
        cur = apply_f(cur, it->residue, it->power);
        if (cur.is_zero()) break;
    }
    return cur;
}

OperatorWord translate_word(const OperatorWord& w, int d) {
    if (d < 0 || d >= w.modulus) throw std::invalid_argument("insertion column out of range");
    OperatorWord out;
    out.modulus = w.modulus + 1;
    for (const auto& f : w.factors) {
        const int i = mod(f.residue, w.modulus);
        if (i == d) {
            out.factors.push_back({d, f.power});
            out.factors.push_back({d + 1, f.power});
        } else {
            out.factors.push_back({i < d ? i : i + 1, f.power});
        }
    }
    return out;
}

OperatorWord ladder_word(const Partition& p, int e, int s1) {
    OperatorWord w;
    w.modulus = e;
    const auto lads = ladders(p, e);
    for (auto it = lads.rbegin(); it != lads.rend(); ++it)
        w.factors.push_back({mod(it->residue + s1, e), it->size});
    return w;
}

std::string to_string(const FockVector& v) {
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& [label, c] : v.terms()) {
        if (!s.empty()) s += " + ";
        const auto terms = c.terms();
        if (terms.size() == 1 && terms.begin()->second == 1) {
            if (terms.begin()->first != 0) s += to_string(c);
        } else if (terms.size() == 1) {
            s += to_string(c);
        } else {
            s += "(" + to_string(c) + ")";
        }
        s += to_string(label);
    }
    return s;
}

}  // namespace akfock
