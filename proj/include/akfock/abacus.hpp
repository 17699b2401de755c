#pragma once

// Truncated abacus displays and the runner-insertion operators.

#include <string>
#include <vector>

#include "akfock/partition.hpp"
#include "akfock/word.hpp"

namespace akfock {

/// Bead positions of each component, sorted ascending. Component j has
/// beads[j] beads at positions λ_i + beads[j] - i, 1 <= i <= beads[j].
struct AbacusDisplay {
    int e = 2;
    std::vector<int> beads;
    std::vector<std::vector<int>> positions;

    int level() const { return static_cast<int>(beads.size()); }
};

/// Single-component display. Throws if n_beads < length of p.
AbacusDisplay abacus_from_partition(const Partition& p, int n_beads, int e);
AbacusDisplay abacus_from_multipartition(const Multipartition& m, const std::vector<int>& beads, int e);
/// Reads component j back. Throws on negative or repeated positions.
Partition partition_from_abacus(const AbacusDisplay& a, int j = 0);
Multipartition multipartition_from_abacus(const AbacusDisplay& a);

/// Runners as columns 0..e-1, "O" for a bead and "-" for a gap, one row per
/// level from the top, one block per component.
std::string render_abacus(const AbacusDisplay& a);

/// The e-core: every bead pushed as high as it will go on its runner.
Partition e_core(const Partition& p, int e);

/// Smallest n_j >= |m| with n_j ≡ s_j (mod e), for every component.
std::vector<int> default_bead_counts(const Multipartition& m, const Multicharge& charge);

/// Parameters of a full-runner insertion: n_j + k_j = c_j e + d.
struct RunnerInsertion {
    std::vector<int> k;
    int d = 0;
    std::vector<int> c;
};

/// Derives d and c. Throws std::invalid_argument naming every component
/// whose n_j + k_j is not congruent to that of the first component.
RunnerInsertion make_runner_insertion(const std::vector<int>& beads, const std::vector<int>& k, int e);

struct FullRunnerPartitionResult {
    Partition partition;
    /// Beads on the (e+1)-runner abacus, n + c.
    int charge = 0;
    int d = 0;
    int c = 0;
};

FullRunnerPartitionResult add_full_runner_partition(const Partition& p, int n_beads, int e, int k);

/// ∅^{+k} from its closed form.
Partition empty_plus_k_closed_form(int e, int k);

struct RunnerResult {
    Multipartition multipartition;
    /// Bead counts on the e+1 runners; as a multicharge modulo e+1.
    Multicharge charge;
    std::vector<int> beads;
    int d = 0;
    std::vector<int> c;
};

RunnerResult add_full_runner_multi(const Multipartition& m, const std::vector<int>& beads, int e,
                                   const std::vector<int>& k);

/// Inserts a runner with no beads immediately left of column d.
RunnerResult add_empty_runner_multi(const Multipartition& m, const std::vector<int>& beads, int e, int d);

/// The word over residues mod e+1 sending (∅, ...) to (∅^{+k}, ...), with
/// residues shifted by a1, the first entry of the (e+1)-multicharge. Empty
/// for k < e.
OperatorWord induction_sequence_empty(int e, int k, int a1);

/// k^(r) >= μ_1^(r), and for 1 <= h < j <= r:
/// k^(j) - k^(h) >= μ_1^(j) + e - 1 + Σ_{h<t<j} |μ^(t)|.
bool check_k_conditions(const Multipartition& mu, const std::vector<int>& k, int e);

/// A small k satisfying check_k_conditions together with the common
/// congruence n_j + k_j ≡ d (mod e), filled in from the first component
/// (k^(1) = μ_1^(1)).
std::vector<int> suggest_min_k(const Multipartition& mu, const std::vector<int>& beads, int e);

/// Whether, in every component, the last bead on runner d-1 sits at
/// position at most (c_j - 1)e + d - 1.
bool last_bead_condition(const Multipartition& m, const std::vector<int>& beads, int e,
                         const RunnerInsertion& ins);

}  // namespace akfock
