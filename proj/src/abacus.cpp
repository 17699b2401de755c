#include "akfock/abacus.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace akfock {

AbacusDisplay abacus_from_partition(const Partition& p, int n_beads, int e) {
    return abacus_from_multipartition(Multipartition{p}, {n_beads}, e);
}

AbacusDisplay abacus_from_multipartition(const Multipartition& m, const std::vector<int>& beads, int e) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    if (static_cast<int>(beads.size()) != m.level())
        throw std::invalid_argument("need one bead count per component");
    AbacusDisplay a{e, beads, {}};
    for (int j = 0; j < m.level(); ++j) {
        const int n = beads[static_cast<std::size_t>(j)];
        if (n < m[j].length())
            throw std::invalid_argument("component " + std::to_string(j + 1) + " has " +
                                        std::to_string(m[j].length()) + " parts but only " +
                                        std::to_string(n) + " beads");
        std::vector<int> pos;
        pos.reserve(static_cast<std::size_t>(n));
        for (int i = n; i >= 1; --i) pos.push_back(m[j].part(i) + n - i);
        a.positions.push_back(std::move(pos));
    }
    return a;
}

Partition partition_from_abacus(const AbacusDisplay& a, int j) {
    auto pos = a.positions.at(static_cast<std::size_t>(j));
    std::sort(pos.begin(), pos.end());
    if (!pos.empty() && pos.front() < 0) throw std::invalid_argument("negative bead position");
    if (std::adjacent_find(pos.begin(), pos.end()) != pos.end())
        throw std::invalid_argument("two beads share a position");
    const int n = static_cast<int>(pos.size());
    std::vector<int> parts;
    for (int i = 1; i <= n; ++i) parts.push_back(pos[static_cast<std::size_t>(n - i)] - (n - i));
    return Partition(std::move(parts));
}

Multipartition multipartition_from_abacus(const AbacusDisplay& a) {
    std::vector<Partition> comps;
    for (int j = 0; j < a.level(); ++j) comps.push_back(partition_from_abacus(a, j));
    return Multipartition(std::move(comps));
}

std::string render_abacus(const AbacusDisplay& a) {
    std::string out;
    for (int j = 0; j < a.level(); ++j) {
        const auto& pos = a.positions[static_cast<std::size_t>(j)];
        const std::set<int> beads(pos.begin(), pos.end());
        const int top = pos.empty() ? -1 : *beads.rbegin();
        const int rows = top / a.e + 2;
        if (j > 0) out += "\n";
        out += "component " + std::to_string(j + 1) + ", " + std::to_string(pos.size()) + " beads\n";
        std::string header;
        for (int y = 0; y < a.e; ++y) header += (y ? " " : "") + std::to_string(y);
        out += header + "\n";
        for (int x = 0; x < rows; ++x) {
            for (int y = 0; y < a.e; ++y) {
                const int w = static_cast<int>(std::to_string(y).size());
                if (y) out += " ";
                out += beads.count(x * a.e + y) ? "O" : "-";
                out.append(static_cast<std::size_t>(w - 1), ' ');
            }
            out += "\n";
        }
    }
    return out;
}

Partition e_core(const Partition& p, int e) {
    const int n = p.length();
    const auto a = abacus_from_partition(p, n, e);
    std::vector<int> count(static_cast<std::size_t>(e), 0);
    for (int q : a.positions[0]) ++count[static_cast<std::size_t>(q % e)];
    AbacusDisplay core{e, {n}, {{}}};
    for (int y = 0; y < e; ++y)
        for (int x = 0; x < count[static_cast<std::size_t>(y)]; ++x) core.positions[0].push_back(x * e + y);
    return partition_from_abacus(core, 0);
}

std::vector<int> default_bead_counts(const Multipartition& m, const Multicharge& charge) {
    if (m.level() != charge.level()) throw std::invalid_argument("multicharge level mismatch");
    const int size = m.size();
    std::vector<int> out;
    for (int j = 0; j < m.level(); ++j) out.push_back(size + mod(charge.entries[static_cast<std::size_t>(j)] - size, charge.e));
    return out;
}

RunnerInsertion make_runner_insertion(const std::vector<int>& beads, const std::vector<int>& k, int e) {
    if (beads.size() != k.size() || beads.empty())
        throw std::invalid_argument("k must have one entry per component");
    for (int kj : k)
        if (kj < 0) throw std::invalid_argument("k entries must be non-negative");
    RunnerInsertion ins{k, mod(beads[0] + k[0], e), {}};
    std::string bad;
    for (std::size_t j = 0; j < k.size(); ++j) {
        const int total = beads[j] + k[j];
        if (mod(total, e) != ins.d) bad += (bad.empty() ? "" : ", ") + std::to_string(j + 1);
        ins.c.push_back(floor_div(total, e));
    }
    if (!bad.empty())
        throw std::invalid_argument("n_j + k_j is not congruent to n_1 + k_1 mod " + std::to_string(e) +
                                    " in component(s) " + bad);
    return ins;
}

namespace {

RunnerResult insert_runner(const Multipartition& m, const std::vector<int>& beads, int e, int d,
                           const std::vector<int>& c) {
    const auto a = abacus_from_multipartition(m, beads, e);
    AbacusDisplay out{e + 1, {}, {}};
    for (int j = 0; j < m.level(); ++j) {
        std::vector<int> pos;
        for (int p : a.positions[static_cast<std::size_t>(j)]) {
            const int x = p / e, y = p % e;
            pos.push_back(x * (e + 1) + y + (y >= d ? 1 : 0));
        }
        const int cj = c[static_cast<std::size_t>(j)];
        for (int t = 0; t < cj; ++t) pos.push_back(d + t * (e + 1));
        std::sort(pos.begin(), pos.end());
        out.beads.push_back(static_cast<int>(pos.size()));
        out.positions.push_back(std::move(pos));
    }
    return RunnerResult{multipartition_from_abacus(out), Multicharge(out.beads, e + 1), out.beads, d, c};
}

}  // namespace

FullRunnerPartitionResult add_full_runner_partition(const Partition& p, int n_beads, int e, int k) {
    const auto res = add_full_runner_multi(Multipartition{p}, {n_beads}, e, {k});
    return {res.multipartition[0], res.beads[0], res.d, res.c[0]};
}

Partition empty_plus_k_closed_form(int e, int k) {
    if (e < 2 || k < 0) throw std::invalid_argument("need e >= 2 and k >= 0");
    if (k <= e) return {};
    const int k1 = k / e, k2 = k % e;
    std::vector<int> parts;
    for (int t = k1 - 1; t >= 0; --t) parts.push_back(t * e + k2);
    return Partition(std::move(parts));
}

RunnerResult add_full_runner_multi(const Multipartition& m, const std::vector<int>& beads, int e,
                                   const std::vector<int>& k) {
    if (static_cast<int>(k.size()) != m.level()) throw std::invalid_argument("k must have one entry per component");
    const auto ins = make_runner_insertion(beads, k, e);
    for (int cj : ins.c)
        if (cj < 0) throw std::invalid_argument("negative bead count on the new runner");
    return insert_runner(m, beads, e, ins.d, ins.c);
}

RunnerResult add_empty_runner_multi(const Multipartition& m, const std::vector<int>& beads, int e, int d) {
    if (d < 0 || d >= e) throw std::invalid_argument("insertion column out of range");
    return insert_runner(m, beads, e, d, std::vector<int>(static_cast<std::size_t>(m.level()), 0));
}

OperatorWord induction_sequence_empty(int e, int k, int a1) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    OperatorWord w;
    w.modulus = e + 1;
    const int k1 = k / e, k2 = k % e;
    if (k1 == 0) return w;
    const int alpha = k + a1, beta = k - k2 + a1;
    const int m = e + 1;
    for (int i = alpha; i > beta; --i) w.factors.push_back({mod(i, m), k1});
    for (int ell = k1 - 1; ell >= 1; --ell) {
        const int top = beta + (k1 - 1 - ell);
        for (int t = 0; t < e; ++t) w.factors.push_back({mod(top - t, m), ell});
    }
    return w;
}

bool check_k_conditions(const Multipartition& mu, const std::vector<int>& k, int e) {
    const int r = mu.level();
    if (static_cast<int>(k.size()) != r) return false;
    if (k[static_cast<std::size_t>(r - 1)] < mu[r - 1].part(1)) return false;
    for (int j = 1; j < r; ++j) {
        for (int h = 0; h < j; ++h) {
            int need = mu[j].part(1) + e - 1;
            for (int t = h + 1; t < j; ++t) need += mu[t].size();
            if (k[static_cast<std::size_t>(j)] - k[static_cast<std::size_t>(h)] < need) return false;
        }
    }
    return true;
}

std::vector<int> suggest_min_k(const Multipartition& mu, const std::vector<int>& beads, int e) {
    const int r = mu.level();
    if (static_cast<int>(beads.size()) != r) throw std::invalid_argument("need one bead count per component");
    if (r == 1) return {mu[0].part(1)};
    // The displayed conditions leave k^(1) free, but k^(1) = 0 is not long
    // enough in general; the level-1 bound k^(1) >= μ_1^(1) is.
    std::vector<int> k{mu[0].part(1)};
    const int d = mod(beads[0] + k[0], e);
    for (int j = 1; j < r; ++j) {
        int need = j == r - 1 ? mu[j].part(1) : 0;
        for (int h = 0; h < j; ++h) {
            int gap = mu[j].part(1) + e - 1;
            for (int t = h + 1; t < j; ++t) gap += mu[t].size();
            need = std::max(need, k[static_cast<std::size_t>(h)] + gap);
        }
        need += mod(d - beads[static_cast<std::size_t>(j)] - need, e);
        k.push_back(need);
    }
    return k;
}

bool last_bead_condition(const Multipartition& m, const std::vector<int>& beads, int e,
                         const RunnerInsertion& ins) {
    const auto a = abacus_from_multipartition(m, beads, e);
    for (int j = 0; j < m.level(); ++j) {
        const int limit = (ins.c[static_cast<std::size_t>(j)] - 1) * e + ins.d - 1;
        for (int p : a.positions[static_cast<std::size_t>(j)])
            if (mod(p, e) == mod(ins.d - 1, e) && p > limit) return false;
    }
    return true;
}

}  // namespace akfock
