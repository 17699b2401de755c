#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "akfock/partition.hpp"

namespace akfock::cli {

enum class Command { CanBasis, DecMat, Abacus, RunnerAdd, VerifyTheorem, VerifyConjecture, Sweep };
enum class Format { Text, Json, Latex };

struct JobConfig {
    Command command = Command::CanBasis;
    /// Several values only for sweep.
    std::vector<int> e;
    std::optional<int> r;
    std::optional<int> n;
    std::optional<std::vector<int>> charge;
    std::optional<Multipartition> mu;
    std::optional<Multipartition> lambda;
    /// Empty optional means "auto".
    std::optional<std::vector<int>> k;
    std::optional<std::vector<int>> beads;
    std::optional<int> d;
    /// runner-add: insert an empty runner instead of a full one.
    bool empty_runner = false;
    /// sweep: check empty-runner instances instead of the theorem.
    bool conjecture = false;
    Format format = Format::Text;
    bool paranoid = false;
    bool eval_at_1 = false;
    bool dual_kleshchev_only = false;
    int jobs = 1;
};

/// Bad arguments; the caller exits with status 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parses the arguments after the program name. Throws UsageError.
JobConfig parse_args(const std::vector<std::string>& args);

/// Checks the combination of options against the command. Throws UsageError.
void validate(const JobConfig& config);

/// 0 on success (an unequal conjecture instance is still success), 1 when
/// a theorem instance fails, 2 on usage errors.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, with --help handling and error reporting.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace akfock::cli
