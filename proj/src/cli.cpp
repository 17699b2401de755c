#include "akfock/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

#include "akfock/io.hpp"

namespace akfock::cli {

namespace {

struct RawOptions {
    std::string e, charge, mu, lambda, k, beads, format = "text";
    int r = 0, n = -1, d = -1, jobs = 1;
    bool empty_runner = false, conjecture = false, paranoid = false, eval_at_1 = false,
         dual_kleshchev_only = false;
};

const char* kFooter =
    "Coefficients are Laurent polynomials in v (the same indeterminate is often written q).\n"
    "Multipartitions are JSON arrays such as [[2,1],[1]]; a flat list like [3,1] is one component.";

struct Parser {
    CLI::App app{"Canonical bases of level-r Fock spaces and runner addition on abacus displays", "akfock"};
    RawOptions raw;
    std::map<CLI::App*, Command> commands;

    Parser() {
        app.footer(kFooter);
        app.require_subcommand(1);
        auto add = [&](const char* name, const char* help, Command c) {
            auto* sub = app.add_subcommand(name, help);
            commands[sub] = c;
            return sub;
        };
        auto* canbasis = add("canbasis", "canonical basis vector G(mu)", Command::CanBasis);
        auto* decmat = add("decmat", "v-decomposition matrix for all labels of size n", Command::DecMat);
        auto* abacus = add("abacus", "abacus display of a multipartition", Command::Abacus);
        auto* runner = add("runner-add", "insert a full (or empty) runner", Command::RunnerAdd);
        auto* theorem = add("verify-theorem", "compare both sides of the full-runner identity", Command::VerifyTheorem);
        auto* conj = add("verify-conjecture", "compare both sides of the empty-runner identity", Command::VerifyConjecture);
        auto* sweep = add("sweep", "check every multiregular label up to a given size", Command::Sweep);

        for (auto* sub : {canbasis, decmat, abacus, runner, theorem, conj, sweep}) {
            sub->add_option("--e", raw.e, sweep == sub ? "values of e, comma separated" : "number of runners e >= 2")
                ->required();
            sub->add_option("--format", raw.format, "text, json or latex")
                ->check(CLI::IsMember({"text", "json", "latex"}));
        }
        for (auto* sub : {canbasis, decmat, abacus, runner, theorem, conj, sweep})
            sub->add_option("--charge", raw.charge, "multicharge, comma separated");
        for (auto* sub : {canbasis, abacus, runner, theorem, conj})
            sub->add_option("--mu", raw.mu, "multipartition literal")->required();
        for (auto* sub : {decmat, sweep}) sub->add_option("--r", raw.r, "level")->check(CLI::PositiveNumber);
        decmat->add_option("--n", raw.n, "size")->required()->check(CLI::NonNegativeNumber);
        sweep->add_option("--n", raw.n, "largest size (default 6)")->check(CLI::NonNegativeNumber);
        for (auto* sub : {canbasis, decmat, theorem, conj, sweep}) {
            sub->add_flag("--paranoid", raw.paranoid, "re-check every subtraction");
        }
        for (auto* sub : {canbasis, decmat}) sub->add_flag("--eval-at-1", raw.eval_at_1, "print values at v = 1");
        decmat->add_flag("--dual-kleshchev-only", raw.dual_kleshchev_only, "keep dual Kleshchev columns only");
        for (auto* sub : {decmat, sweep}) sub->add_option("--jobs", raw.jobs, "worker threads")->check(CLI::PositiveNumber);
        for (auto* sub : {abacus, runner}) sub->add_option("--beads", raw.beads, "bead counts, comma separated");
        runner->add_option("--k", raw.k, "k vector, comma separated");
        theorem->add_option("--k", raw.k, "k vector, comma separated, or auto");
        runner->add_flag("--empty", raw.empty_runner, "insert a runner without beads (needs --d)");
        for (auto* sub : {runner, conj, sweep}) sub->add_option("--d", raw.d, "insertion column")->check(CLI::NonNegativeNumber);
        conj->add_option("--lambda", raw.lambda, "compare only this row");
        sweep->add_flag("--conjecture", raw.conjecture, "check the empty-runner identity instead");
    }

    void parse(const std::vector<std::string>& args) {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    }

    Command chosen() const {
        for (const auto& [sub, c] : commands)
            if (sub->parsed()) return c;
        throw UsageError("no subcommand given");
    }
};

std::optional<std::vector<int>> list_option(const std::string& text, const char* name) {
    if (text.empty()) return std::nullopt;
    try {
        return parse_int_list(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--") + name + ": " + e.what());
    }
}

std::optional<Multipartition> mp_option(const std::string& text, const char* name) {
    if (text.empty()) return std::nullopt;
    try {
        return parse_multipartition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--") + name + ": " + e.what());
    }
}

JobConfig to_config(const Parser& p) {
    const auto& raw = p.raw;
    JobConfig c;
    c.command = p.chosen();
    c.e = *list_option(raw.e, "e");
    if (raw.r > 0) c.r = raw.r;
    if (raw.n >= 0) c.n = raw.n;
    c.charge = list_option(raw.charge, "charge");
    c.mu = mp_option(raw.mu, "mu");
    c.lambda = mp_option(raw.lambda, "lambda");
    if (!raw.k.empty() && raw.k != "auto") c.k = list_option(raw.k, "k");
    c.beads = list_option(raw.beads, "beads");
    if (raw.d >= 0) c.d = raw.d;
    c.empty_runner = raw.empty_runner;
    c.conjecture = raw.conjecture;
    c.format = raw.format == "json" ? Format::Json : raw.format == "latex" ? Format::Latex : Format::Text;
    c.paranoid = raw.paranoid;
    c.eval_at_1 = raw.eval_at_1;
    c.dual_kleshchev_only = raw.dual_kleshchev_only;
    c.jobs = raw.jobs;
    if (c.command == Command::RunnerAdd && !c.empty_runner && !c.k)
        throw UsageError("runner-add needs --k (or --empty with --d)");
    return c;
}

int single_e(const JobConfig& c) { return c.e.front(); }

int level_of(const JobConfig& c) {
    if (c.mu) return c.mu->level();
    if (c.r) return *c.r;
    if (c.charge) return static_cast<int>(c.charge->size());
    return 1;
}

Multicharge charge_of(const JobConfig& c, int e, int r) {
    return Multicharge(c.charge ? *c.charge : std::vector<int>(static_cast<std::size_t>(r), 0), e);
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
    return s;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int run_canbasis(const JobConfig& c, std::ostream& out) {
    const auto charge = charge_of(c, single_e(c), level_of(c));
    BasisCache cache;
    const auto res = fayers_canonical_basis_traced(*c.mu, charge, cache, BasisOptions{c.paranoid});
    if (c.format == Format::Json) {
        Json j = to_json(res);
        if (c.eval_at_1) {
            Json vals = Json::array();
            for (const auto& [label, p] : res.g.vector.terms())
                vals.push_back(Json{{"mp", to_json(label)}, {"value", eval_at_1(p)}});
            j["values_at_1"] = vals;
        }
        print_json(out, j);
        return 0;
    }
    out << "G" << to_string(*c.mu) << " for e=" << charge.e << ", charge " << join(charge.entries) << "\n";
    if (c.eval_at_1) {
        for (const auto& [label, p] : res.g.vector.terms()) out << eval_at_1(p) << "  " << to_string(label) << "\n";
    } else {
        out << format_vector_text(res.g.vector);
    }
    for (const auto& s : res.log) out << "subtracted (" << to_string(s.alpha) << ") G" << to_string(s.nu) << "\n";
    if (res.g.has_negative_coefficient) out << "warning: negative coefficient present\n";
    return 0;
}

int run_decmat(const JobConfig& c, std::ostream& out) {
    const auto charge = charge_of(c, single_e(c), level_of(c));
    BasisCache cache;
    const auto m = decomposition_matrix(*c.n, charge, c.dual_kleshchev_only, cache, c.jobs, BasisOptions{c.paranoid});
    if (c.format == Format::Json) print_json(out, to_json(m, c.eval_at_1));
    else if (c.format == Format::Latex) out << format_matrix_latex(m, c.eval_at_1);
    else out << format_matrix_text(m, c.eval_at_1);
    return 0;
}

std::vector<int> beads_of(const JobConfig& c, const Multipartition& mu, int e) {
    if (c.beads) return *c.beads;
    return default_bead_counts(mu, charge_of(c, e, mu.level()));
}

int run_abacus(const JobConfig& c, std::ostream& out) {
    const int e = single_e(c);
    const auto a = abacus_from_multipartition(*c.mu, beads_of(c, *c.mu, e), e);
    if (c.format == Format::Json) {
        Json j = to_json(a);
        j["multipartition"] = to_json(*c.mu);
        Json cores = Json::array();
        for (const auto& p : c.mu->components()) cores.push_back(e_core(p, e).parts());
        j["cores"] = cores;
        print_json(out, j);
        return 0;
    }
    out << to_string(*c.mu) << "\n" << render_abacus(a);
    for (int j = 0; j < c.mu->level(); ++j)
        out << "core of component " << j + 1 << ": " << to_string(e_core((*c.mu)[j], e)) << "\n";
    return 0;
}

int run_runner_add(const JobConfig& c, std::ostream& out) {
    const int e = single_e(c);
    const auto beads = beads_of(c, *c.mu, e);
    const auto res = c.empty_runner ? add_empty_runner_multi(*c.mu, beads, e, *c.d)
                                    : add_full_runner_multi(*c.mu, beads, e, *c.k);
    const auto a = abacus_from_multipartition(res.multipartition, res.beads, e + 1);
    if (c.format == Format::Json) {
        print_json(out, Json{{"multipartition", to_json(res.multipartition)},
                             {"charge", res.beads},
                             {"d", res.d},
                             {"c", res.c},
                             {"abacus", to_json(a)}});
        return 0;
    }
    out << (res.multipartition.level() == 1 ? to_string(res.multipartition[0]) : to_string(res.multipartition))
        << "\n";
    out << "beads " << join(res.beads) << " on " << e + 1 << " runners, new runner at column " << res.d << "\n";
    out << render_abacus(a);
    return 0;
}

int run_theorem(const JobConfig& c, std::ostream& out) {
    const auto charge = charge_of(c, single_e(c), level_of(c));
    BasisCache cache;
    const auto rep = verify_full_runner(*c.mu, charge, c.k, cache, BasisOptions{c.paranoid});
    if (c.format == Format::Json) print_json(out, to_json(rep));
    else out << format_report_text(rep);
    return rep.equal ? 0 : 1;
}

int run_conjecture(const JobConfig& c, std::ostream& out) {
    const auto charge = charge_of(c, single_e(c), level_of(c));
    BasisCache cache;
    const auto rep = verify_empty_runner(*c.mu, c.lambda, charge, *c.d, cache, BasisOptions{c.paranoid});
    if (c.format == Format::Json) print_json(out, to_json(rep));
    else out << format_report_text(rep);
    return 0;
}

struct SweepItem {
    Multipartition mu;
    Multicharge charge;
    int d = 0;
};

int run_sweep(const JobConfig& c, std::ostream& out) {
    const int max_n = c.n.value_or(6);
    const int max_r = c.r.value_or(2);
    std::vector<SweepItem> items;
    for (int e : c.e) {
        for (int r = 1; r <= max_r; ++r) {
            std::vector<std::vector<int>> charges;
            if (c.charge) {
                if (static_cast<int>(c.charge->size()) != r) continue;
                charges.push_back(*c.charge);
            } else {
                for (int bits = 0; bits < (1 << r); ++bits) {
                    std::vector<int> s;
                    for (int j = 0; j < r; ++j) s.push_back((bits >> (r - 1 - j)) & 1);
                    charges.push_back(s);
                }
            }
            for (const auto& s : charges)
                for (int n = 0; n <= max_n; ++n)
                    for (const auto& mu : multipartitions_of(n, r)) {
                        if (!is_e_multiregular(mu, e)) continue;
                        if (!c.conjecture) {
                            items.push_back({mu, Multicharge(s, e), 0});
                        } else if (c.d) {
                            items.push_back({mu, Multicharge(s, e), *c.d});
                        } else {
                            for (int d = 0; d < e; ++d) items.push_back({mu, Multicharge(s, e), d});
                        }
                    }
        }
    }

    std::vector<std::string> lines(items.size());
    std::vector<Json> reports(items.size());
    std::vector<char> ok(items.size(), 0);
    std::map<std::pair<int, std::vector<int>>, std::unique_ptr<BasisCache>> caches;
    for (const auto& it : items) {
        auto key = std::make_pair(it.charge.e, it.charge.entries);
        if (!caches.count(key)) caches.emplace(key, std::make_unique<BasisCache>());
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < items.size();) {
            const auto& it = items[t];
            auto& cache = *caches.at({it.charge.e, it.charge.entries});
            try {
                const auto rep = c.conjecture
                                     ? verify_empty_runner(it.mu, std::nullopt, it.charge, it.d, cache, BasisOptions{c.paranoid})
                                     : verify_full_runner(it.mu, it.charge, std::nullopt, cache, BasisOptions{c.paranoid});
                lines[t] = rep.summary();
                if (c.format == Format::Json) reports[t] = to_json(rep);
                ok[t] = rep.equal;
            } catch (const std::exception& ex) {
                lines[t] = "ERROR e=" + std::to_string(it.charge.e) + " mu=" + to_string(it.mu) + " charge=" +
                           join(it.charge.entries) + " : " + ex.what();
                if (c.format == Format::Json) reports[t] = Json{{"mu", to_json(it.mu)}, {"error", ex.what()}};
            }
        }
    };
    if (c.jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < c.jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    const auto equal = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 1));
    if (c.format == Format::Json) {
        Json arr = Json::array();
        for (auto& r : reports) arr.push_back(std::move(r));
        print_json(out, Json{{"instances", items.size()}, {"equal", equal}, {"reports", arr}});
    } else {
        for (std::size_t t = 0; t < items.size(); ++t) {
            std::string line = lines[t];
            if (!line.starts_with("ERROR")) line += " charge=" + join(items[t].charge.entries);
            out << line << "\n";
        }
        out << "sweep: " << items.size() << " instances, " << equal << " equal, " << items.size() - equal
            << " not equal\n";
    }
    return c.conjecture || equal == items.size() ? 0 : 1;
}

}  // namespace

JobConfig parse_args(const std::vector<std::string>& args) {
    Parser p;
    try {
        p.parse(args);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    return to_config(p);
}

void validate(const JobConfig& c) {
    if (c.e.empty()) throw UsageError("--e is required");
    for (int e : c.e)
        if (e < 2) throw UsageError("e must be at least 2");
    if (c.command != Command::Sweep && c.e.size() != 1) throw UsageError("--e takes a single value here");
    if (c.jobs < 1) throw UsageError("--jobs must be positive");
    const int r = level_of(c);
    if (c.mu && c.charge && static_cast<int>(c.charge->size()) != c.mu->level())
        throw UsageError("--charge has " + std::to_string(c.charge->size()) + " entries but --mu has " +
                         std::to_string(c.mu->level()) + " components");
    if (c.r && c.charge && static_cast<int>(c.charge->size()) != *c.r && c.command != Command::Sweep)
        throw UsageError("--charge does not have --r entries");
    if (c.lambda && c.mu && (c.lambda->level() != c.mu->level() || c.lambda->size() != c.mu->size()))
        throw UsageError("--lambda must have the same level and size as --mu");
    if (c.beads) {
        if (!c.mu || static_cast<int>(c.beads->size()) != c.mu->level())
            throw UsageError("--beads needs one entry per component");
        for (int j = 0; j < c.mu->level(); ++j)
            if ((*c.beads)[static_cast<std::size_t>(j)] < (*c.mu)[j].length())
                throw UsageError("component " + std::to_string(j + 1) + " needs at least " +
                                 std::to_string((*c.mu)[j].length()) + " beads");
    }
    const int e = c.e.front();
    switch (c.command) {
        case Command::CanBasis:
        case Command::VerifyTheorem:
        case Command::VerifyConjecture:
            if (!is_e_multiregular(*c.mu, e))
                throw UsageError(to_string(*c.mu) + " is not " + std::to_string(e) + "-multiregular");
            break;
        default:
            break;
    }
    if (c.command == Command::VerifyConjecture && !c.d) throw UsageError("verify-conjecture needs --d");
    if (c.command == Command::RunnerAdd) {
        if (c.empty_runner && !c.d) throw UsageError("--empty needs --d");
        if (c.d && *c.d >= e) throw UsageError("--d must be below e");
        if (!c.empty_runner) {
            if (!c.k || static_cast<int>(c.k->size()) != r) throw UsageError("--k needs one entry per component");
            try {
                make_runner_insertion(beads_of(c, *c.mu, e), *c.k, e);
            } catch (const std::invalid_argument& ex) {
                throw UsageError(ex.what());
            }
        }
    }
    if ((c.command == Command::VerifyConjecture || c.command == Command::Sweep) && c.d && *c.d >= e)
        throw UsageError("--d must be below e");
    if (c.command == Command::VerifyTheorem && c.k) {
        if (static_cast<int>(c.k->size()) != r) throw UsageError("--k needs one entry per component");
        if (!check_k_conditions(*c.mu, *c.k, e))
            throw UsageError("k=(" + join(*c.k) + ") does not satisfy the conditions on k for " + to_string(*c.mu));
        try {
            make_runner_insertion(beads_of(c, *c.mu, e), *c.k, e);
        } catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
        }
    }
    if (c.format == Format::Latex && c.command != Command::DecMat) throw UsageError("latex output is only for decmat");
}

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        switch (config.command) {
            case Command::CanBasis: return run_canbasis(config, out);
            case Command::DecMat: return run_decmat(config, out);
            case Command::Abacus: return run_abacus(config, out);
            case Command::RunnerAdd: return run_runner_add(config, out);
            case Command::VerifyTheorem: return run_theorem(config, out);
            case Command::VerifyConjecture: return run_conjecture(config, out);
            case Command::Sweep: return run_sweep(config, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Parser p;
    try {
        p.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << p.app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << p.app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        // Subcommand help requests surface here too.
        if (e.get_exit_code() == 0) {
            for (const auto* sub : p.app.get_subcommands()) out << sub->help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        return run(to_config(p), out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace akfock::cli
