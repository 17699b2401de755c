#include "akfock/runner.hpp"

#include <set>
#include <stdexcept>

namespace akfock {

namespace {

std::string join(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
    return s + ")";
}

void check_beads(const FockVector& v, const std::vector<int>& beads) {
    if (static_cast<int>(beads.size()) != v.level())
        throw std::invalid_argument("need one bead count per component");
    for (int j = 0; j < v.level(); ++j)
        if (mod(beads[static_cast<std::size_t>(j)], v.e()) != v.charge().residue(j))
            throw std::invalid_argument("bead count of component " + std::to_string(j + 1) +
                                        " does not match the multicharge modulo e");
}

template <typename Insert>
FockVector relabel(const FockVector& v, const std::vector<int>& beads, Insert insert) {
    check_beads(v, beads);
    std::vector<int> image_beads;
    if (v.is_zero()) {
        // Bead counts on the new abacus do not depend on the label.
        image_beads = insert(Multipartition::empty_of_level(v.level())).beads;
    }
    std::optional<FockVector> out;
    std::set<Multipartition> seen;
    for (const auto& [label, c] : v.terms()) {
        const auto res = insert(label);
        if (!out) out.emplace(Multicharge(res.beads, v.e() + 1));
        if (!seen.insert(res.multipartition).second)
            throw std::logic_error("runner insertion sends two labels to " + to_string(res.multipartition));
        out->add_term(res.multipartition, c);
    }
    if (!out) out.emplace(Multicharge(image_beads, v.e() + 1));
    return *out;
}

void compare(RunnerReport& rep, bool image_only, const std::optional<Multipartition>& only) {
    rep.diffs.clear();
    rep.extra_labels.clear();
    std::set<Multipartition> labels;
    for (const auto& [label, c] : rep.rhs.terms()) labels.insert(label);
    if (!image_only)
        for (const auto& [label, c] : rep.lhs.terms()) labels.insert(label);
    for (const auto& label : labels) {
        if (only && label != *only) continue;
        const auto a = rep.lhs.coeff(label), b = rep.rhs.coeff(label);
        if (a != b) rep.diffs.push_back({label, a, b});
    }
    if (image_only)
        for (const auto& [label, c] : rep.lhs.terms())
            if (rep.rhs.coeff(label).is_zero()) rep.extra_labels.push_back(label);
    rep.equal = rep.diffs.empty();
}

}  // namespace

std::string RunnerReport::summary() const {
    std::string s = kind == Kind::FullRunner ? "THEOREM" : "CONJECTURE";
    s += " e=" + std::to_string(e()) + "→" + std::to_string(e() + 1) + " mu=" + to_string(mu);
    if (kind == Kind::FullRunner) s += " k=" + join(k);
    s += " d=" + std::to_string(d) + " : " + (equal ? "EQUAL" : "UNEQUAL");
    s += " (" + std::to_string(rhs.term_count()) + " terms";
    if (!equal) s += ", " + std::to_string(diffs.size()) + " differing";
    return s + ")";
}

FockVector plus_k_vector(const FockVector& v, const std::vector<int>& beads, const std::vector<int>& k) {
    return relabel(
        v, beads, [&](const Multipartition& m) { return add_full_runner_multi(m, beads, v.e(), k); });
}

FockVector plus_empty_vector(const FockVector& v, const std::vector<int>& beads, int d) {
    return relabel(
        v, beads, [&](const Multipartition& m) { return add_empty_runner_multi(m, beads, v.e(), d); });
}

RunnerReport verify_full_runner(const Multipartition& mu, const Multicharge& charge,
                                const std::optional<std::vector<int>>& k, BasisCache& cache,
                                const BasisOptions& opts) {
    if (!is_e_multiregular(mu, charge.e))
        throw std::invalid_argument(to_string(mu) + " is not " + std::to_string(charge.e) + "-multiregular");
    const auto beads = default_bead_counts(mu, charge);
    const auto kk = k ? *k : suggest_min_k(mu, beads, charge.e);
    if (!check_k_conditions(mu, kk, charge.e))
        throw std::invalid_argument("k=" + join(kk) + " does not satisfy the conditions on k for " + to_string(mu));
    const auto ins = make_runner_insertion(beads, kk, charge.e);
    const auto image = add_full_runner_multi(mu, beads, charge.e, kk);

    const auto g = fayers_canonical_basis(mu, charge, cache, opts);
    RunnerReport rep{RunnerReport::Kind::FullRunner,
                     mu,
                     image.multipartition,
                     charge,
                     image.charge,
                     beads,
                     kk,
                     ins.d,
                     fayers_canonical_basis(image.multipartition, image.charge, cache, opts).vector,
                     plus_k_vector(g.vector, beads, kk),
                     false,
                     {},
                     {}};
    compare(rep, false, std::nullopt);
    return rep;
}

RunnerReport verify_empty_runner(const Multipartition& mu, const std::optional<Multipartition>& lambda,
                                 const Multicharge& charge, int d, BasisCache& cache,
                                 const BasisOptions& opts) {
    if (!is_e_multiregular(mu, charge.e))
        throw std::invalid_argument(to_string(mu) + " is not " + std::to_string(charge.e) + "-multiregular");
    const auto beads = default_bead_counts(mu, charge);
    const auto image = add_empty_runner_multi(mu, beads, charge.e, d);
    const auto g = fayers_canonical_basis(mu, charge, cache, opts);
    RunnerReport rep{RunnerReport::Kind::EmptyRunner,
                     mu,
                     image.multipartition,
                     charge,
                     image.charge,
                     beads,
                     {},
                     d,
                     FockVector(image.charge),
                     plus_empty_vector(g.vector, beads, d),
                     false,
                     {},
                     {}};
    std::optional<Multipartition> only;
    if (lambda) only = add_empty_runner_multi(*lambda, beads, charge.e, d).multipartition;
    // Without a multiregular image there is no canonical vector, and lhs
    // stays zero so every image term shows up as a difference.
    if (is_e_multiregular(image.multipartition, charge.e + 1))
        rep.lhs = fayers_canonical_basis(image.multipartition, image.charge, cache, opts).vector;
    compare(rep, true, only);
    return rep;
}

bool verify_empty_runner_prefix(const Multipartition& mu, const Multicharge& charge,
                                const std::vector<int>& k, BasisCache& cache) {
    if (!mu[0].empty()) throw std::invalid_argument("the first component must be empty");
    if (!check_k_conditions(mu, k, charge.e))
        throw std::invalid_argument("k=" + join(k) + " does not satisfy the conditions on k for " + to_string(mu));
    const auto beads = default_bead_counts(mu, charge);
    const auto image = add_full_runner_multi(mu, beads, charge.e, k);
    const auto plain = image.multipartition.with_component(0, Partition{});
    const auto with_prefix = fayers_canonical_basis(image.multipartition, image.charge, cache).vector;
    const auto without = fayers_canonical_basis(plain, image.charge, cache).vector;
    FockVector mapped(image.charge);
    for (const auto& [label, c] : without.terms())
        mapped.add_term(label.with_component(0, image.multipartition[0]), c);
    return mapped == with_prefix;
}

}  // namespace akfock
