#include "akfock/canonical_basis.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace akfock {

namespace {

Multicharge normalized(const Multicharge& c) { return Multicharge(c.residues(), c.e); }

FockVector with_charge(const FockVector& v, const Multicharge& charge) {
    FockVector out(charge);
    for (const auto& [label, c] : v.terms()) out.add_term(label, c);
    return out;
}

CanonicalBasisVector rewrap(const CanonicalBasisVector& g, const Multicharge& charge) {
    CanonicalBasisVector out{g.mu, with_charge(g.vector, charge), g.has_negative_coefficient};
    return out;
}

void check_multiregular(const Multipartition& mu, const Multicharge& charge) {
    if (mu.level() != charge.level())
        throw std::invalid_argument("label " + to_string(mu) + " does not match the multicharge level");
    if (!is_e_multiregular(mu, charge.e))
        throw std::invalid_argument(to_string(mu) + " is not " + std::to_string(charge.e) +
                                    "-multiregular");
}

void check_coefficient_classes(const FockVector& v, const Multipartition& mu, const char* where) {
    for (const auto& [label, c] : v.terms()) {
        if (label == mu) {
            if (c != LaurentPoly(1))
                throw std::logic_error(std::string(where) + ": leading coefficient of " + to_string(mu) +
                                       " is " + to_string(c));
        } else if (!is_in_vZ(c)) {
            throw std::logic_error(std::string(where) + ": coefficient of " + to_string(label) + " is " +
                                   to_string(c) + ", not in vZ[v]");
        }
    }
}

}  // namespace

CanonicalBasisVector CanonicalBasisVector::validated(Multipartition mu, FockVector vector) {
    if (vector.coeff(mu) != LaurentPoly(1))
        throw std::logic_error("canonical vector for " + to_string(mu) + " lacks a unit leading coefficient");
    bool negative = false;
    for (const auto& [label, c] : vector.terms()) {
        if (label != mu && !is_in_vZ(c))
            throw std::logic_error("canonical vector for " + to_string(mu) + ": coefficient of " +
                                   to_string(label) + " is " + to_string(c) + ", not in vZ[v]");
        if (!dominates(mu, label))
            throw std::logic_error("canonical vector for " + to_string(mu) + " has label " + to_string(label) +
                                   " not dominated by it");
        if (!has_nonnegative_coefficients(c)) negative = true;
    }
    return CanonicalBasisVector{std::move(mu), std::move(vector), negative};
}

std::optional<CanonicalBasisVector> BasisCache::find(const Multicharge& charge, const Multipartition& mu) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(Key{charge.e, charge.residues(), mu});
    if (it == entries_.end()) return std::nullopt;
    return rewrap(it->second, charge);
}

void BasisCache::insert(const Multicharge& charge, const CanonicalBasisVector& g) {
    auto checked = CanonicalBasisVector::validated(g.mu, with_charge(g.vector, normalized(charge)));
    std::unique_lock lock(mutex_);
    entries_.try_emplace(Key{charge.e, charge.residues(), g.mu}, std::move(checked));
}

std::size_t BasisCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

void BasisCache::clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
}

CanonicalBasisVector embed_component(const CanonicalBasisVector& g, int s1) {
    std::vector<int> entries{s1};
    const auto& rest = g.vector.charge().entries;
    entries.insert(entries.end(), rest.begin(), rest.end());
    FockVector v(Multicharge(std::move(entries), g.vector.e()));
    for (const auto& [label, c] : g.vector.terms()) v.add_term(label.prefixed_empty(), c);
    return CanonicalBasisVector{g.mu.prefixed_empty(), std::move(v), g.has_negative_coefficient};
}

namespace {

CanonicalBasisVector compute(const Multipartition& mu, const Multicharge& charge, BasisCache& cache,
                             const BasisOptions& opts, std::vector<Subtraction>* log);

StripResult strip_impl(const FockVector& a, const Multipartition& mu, BasisCache& cache,
                       const BasisOptions& opts) {
    if (a.coeff(mu) != LaurentPoly(1))
        throw std::logic_error("vector to reduce has coefficient " + to_string(a.coeff(mu)) + " at " +
                               to_string(mu));
    FockVector cur = a;
    std::vector<Subtraction> log;
    auto it = cur.terms().begin();
    while (it != cur.terms().end()) {
        const Multipartition nu = it->first;
        const LaurentPoly c = it->second;
        if (nu == mu || is_in_vZ(c)) {
            ++it;
            continue;
        }
        if (!fayers_order_greater(mu, nu))
            throw std::logic_error("label " + to_string(nu) + " with coefficient " + to_string(c) +
                                   " is not below " + to_string(mu) + " in the recursion order");
        if (!is_e_multiregular(nu, a.e()))
            throw std::logic_error("need the canonical vector of " + to_string(nu) +
                                   ", which is not multiregular");
        const auto split = sym_part(c);
        if (!is_bar_invariant(split.alpha))
            throw std::logic_error("subtracted multiple of " + to_string(nu) + " is not bar-invariant");
        const auto g = compute(nu, a.charge(), cache, opts, nullptr);
        cur -= g.vector.scaled(split.alpha);
        log.push_back({nu, split.alpha});
        if (opts.paranoid && !is_in_vZ(cur.coeff(nu)))
            throw std::logic_error("coefficient of " + to_string(nu) + " still outside vZ[v] after subtraction");
        // Subtracting α·G(ν) only touches labels dominated by ν, all of
        // which are lexicographically at most ν.
        it = cur.terms().upper_bound(nu);
    }
    if (opts.paranoid) check_coefficient_classes(cur, mu, "strip");
    return StripResult{CanonicalBasisVector::validated(mu, std::move(cur)), std::move(log)};
}

FockVector a_vector(const Multipartition& mu, const Multicharge& charge, BasisCache& cache,
                    const BasisOptions& opts) {
    const auto mu0 = mu.with_component(0, Partition{});
    const auto g0 = compute(mu0, charge, cache, opts, nullptr);
    return apply_word(g0.vector, ladder_word(mu[0], charge.e, charge.entries[0]));
}

CanonicalBasisVector compute(const Multipartition& mu, const Multicharge& charge, BasisCache& cache,
                             const BasisOptions& opts, std::vector<Subtraction>* log) {
    if (!log) {
        if (auto hit = cache.find(charge, mu)) return *hit;
    }
    CanonicalBasisVector g{mu, FockVector(charge), false};
    if (mu.empty()) {
        g = CanonicalBasisVector::validated(mu, FockVector::basis(mu, charge));
    } else if (mu[0].empty()) {
        const auto rest = compute(mu.tail(), charge.tail(), cache, opts, nullptr);
        g = embed_component(rest, charge.entries[0]);
        g.vector = with_charge(g.vector, charge);
    } else {
        auto res = strip_impl(a_vector(mu, charge, cache, opts), mu, cache, opts);
        g = std::move(res.g);
        if (log) *log = std::move(res.log);
    }
    cache.insert(charge, g);
    return g;
}

}  // namespace

StripResult strip_lower(const FockVector& a, const Multipartition& mu, BasisCache& cache,
                        const BasisOptions& opts) {
    return strip_impl(a, mu, cache, opts);
}

StripResult fayers_canonical_basis_traced(const Multipartition& mu, const Multicharge& charge,
                                          BasisCache& cache, const BasisOptions& opts) {
    check_multiregular(mu, charge);
    std::vector<Subtraction> log;
    auto g = compute(mu, charge, cache, opts, &log);
    return StripResult{std::move(g), std::move(log)};
}

CanonicalBasisVector fayers_canonical_basis(const Multipartition& mu, const Multicharge& charge,
                                            BasisCache& cache, const BasisOptions& opts) {
    check_multiregular(mu, charge);
    return compute(mu, charge, cache, opts, nullptr);
}

FockVector fayers_a_vector(const Multipartition& mu, const Multicharge& charge, BasisCache& cache,
                           const BasisOptions& opts) {
    check_multiregular(mu, charge);
    if (mu[0].empty()) throw std::invalid_argument("the first component must be non-empty");
    return a_vector(mu, charge, cache, opts);
}

namespace {

// Level-1 LLT with a private memo keyed by partition.
struct LltRun {
    int e;
    Multicharge charge;
    std::map<Partition, FockVector> memo;

    const FockVector& get(const Partition& mu) {
        if (auto it = memo.find(mu); it != memo.end()) return it->second;
        const Multipartition label{mu};
        FockVector v = apply_word(FockVector::basis(Multipartition{Partition{}}, charge),
                                  ladder_word(mu, e, charge.entries[0]));
        while (true) {
            // Offenders: off-lead coefficients outside vZ[v]. Pick one that no
            // other offender dominates.
            std::vector<Multipartition> offenders;
            for (const auto& [lab, c] : v.terms())
                if (lab != label && !is_in_vZ(c)) offenders.push_back(lab);
            if (offenders.empty()) break;
            const Multipartition* top = nullptr;
            for (const auto& cand : offenders) {
                bool maximal = true;
                for (const auto& other : offenders)
                    if (other != cand && dominates(other, cand)) maximal = false;
                if (maximal && (!top || cand > *top)) top = &cand;
            }
            const Partition nu = (*top)[0];
            if (!is_e_regular(nu, e))
                throw std::logic_error("LLT needs the canonical vector of the singular partition " + to_string(nu));
            if (!dominates(mu, nu) || mu == nu)
                throw std::logic_error("LLT offender " + to_string(nu) + " not below " + to_string(mu));
            const auto alpha = sym_part(v.coeff(*top)).alpha;
            const FockVector g = get(nu);
            v -= g.scaled(alpha);
        }
        return memo.emplace(mu, std::move(v)).first->second;
    }
};

}  // namespace

CanonicalBasisVector llt_level1(const Partition& mu, int e, int s1) {
    if (!is_e_regular(mu, e)) throw std::invalid_argument(to_string(mu) + " is not " + std::to_string(e) + "-regular");
    LltRun run{e, Multicharge({s1}, e), {}};
    return CanonicalBasisVector::validated(Multipartition{mu}, run.get(mu));
}

DecompositionMatrix decomposition_matrix(int n, const Multicharge& charge, bool dual_kleshchev_only,
                                         BasisCache& cache, int jobs, const BasisOptions& opts) {
    DecompositionMatrix m{charge, multipartitions_of(n, charge.level()), {}, {}};
    for (const auto& label : m.rows) {
        if (!is_e_multiregular(label, charge.e)) continue;
        if (dual_kleshchev_only && !is_dual_kleshchev(label, charge).is_dual_kleshchev) continue;
        m.columns.push_back(label);
    }
    std::vector<std::optional<CanonicalBasisVector>> cols(m.columns.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t c; (c = next.fetch_add(1)) < m.columns.size();) {
            try {
                cols[c] = fayers_canonical_basis(m.columns[c], charge, cache, opts);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    m.entries.assign(m.rows.size(), std::vector<LaurentPoly>(m.columns.size()));
    for (std::size_t r = 0; r < m.rows.size(); ++r)
        for (std::size_t c = 0; c < m.columns.size(); ++c) m.entries[r][c] = cols[c]->vector.coeff(m.rows[r]);
    return m;
}

std::vector<std::vector<LaurentPoly::Coeff>> evaluate_at_1(const DecompositionMatrix& m) {
    std::vector<std::vector<LaurentPoly::Coeff>> out;
    for (const auto& row : m.entries) {
        auto& o = out.emplace_back();
        for (const auto& p : row) o.push_back(eval_at_1(p));
    }
    return out;
}

}  // namespace akfock
