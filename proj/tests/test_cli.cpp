#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "akfock/cli.hpp"

using namespace akfock;

namespace {

struct Run {
    int status = 0;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.status = cli::main_entry(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, CanonicalBasisListing) {
    const auto r = run_cli({"canbasis", "--e", "2", "--charge", "0,0", "--mu", "[[1],[3,1]]"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out,
              "G((1),(3,1)) for e=2, charge 0,0\n"
              "  1  ((1),(3,1))\n"
              "  v  ((1),(2,2))\n"
              "v^2  ((1),(2,1,1))\n"
              "v^2  (∅,(3,2))\n"
              "v^3  (∅,(3,1,1))\n"
              "v^4  (∅,(2,2,1))\n"
              "subtracted (1) G(∅,(3,2))\n");
}

TEST(Cli, CanonicalBasisJson) {
    const auto r = run_cli({"canbasis", "--e", "2", "--charge", "0", "--mu", "[3,1]", "--format", "json"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["mu"], nlohmann::json::parse("[[3,1]]"));
    EXPECT_EQ(j["vector"]["terms"].size(), 3u);
    EXPECT_EQ(j["vector"]["terms"][1]["mp"], nlohmann::json::parse("[[2,2]]"));
    EXPECT_EQ(j["vector"]["terms"][1]["coeff"]["1"], 1);
    EXPECT_TRUE(j["subtractions"].empty());
}

TEST(Cli, RunnerAddOnEmptyPartition) {
    const auto r = run_cli({"runner-add", "--e", "3", "--beads", "7", "--k", "10", "--mu", "[]"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "(7,4,1)");
    EXPECT_TRUE(contains(r.out, "O O O O"));
}

TEST(Cli, RunnerAddEmptyRunner) {
    const auto r = run_cli({"runner-add", "--e", "3", "--beads", "5,4", "--empty", "--d", "2", "--mu", "[[2,1],[1]]"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "((4,2,1),(2,1))");
}

TEST(Cli, DecompositionMatrixAtOne) {
    const auto r = run_cli({"decmat", "--e", "3", "--r", "2", "--n", "4", "--charge", "2,1", "--eval-at-1", "--format",
                            "json"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    const auto target = nlohmann::json::parse("[[2,1],[1]]");
    std::size_t col = 0;
    while (j["columns"][col] != target) ++col;
    std::vector<int> nonzero;
    for (const auto& row : j["entries"])
        if (row[col].get<int>() != 0) nonzero.push_back(row[col].get<int>());
    EXPECT_EQ(nonzero, (std::vector<int>{1, 1, 1}));
}

TEST(Cli, DecompositionMatrixFormatsAgreeAcrossJobs) {
    const std::vector<std::string> base{"decmat", "--e", "2", "--r", "2", "--n", "4", "--charge", "0,1"};
    auto with_jobs = base;
    with_jobs.insert(with_jobs.end(), {"--jobs", "3"});
    const auto a = run_cli(base), b = run_cli(with_jobs);
    ASSERT_EQ(a.status, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    auto latex = base;
    latex.insert(latex.end(), {"--format", "latex"});
    const auto l = run_cli(latex);
    ASSERT_EQ(l.status, 0) << l.err;
    EXPECT_TRUE(contains(l.out, "\\begin{tabular}"));
    EXPECT_TRUE(contains(l.out, "\\varnothing"));
}

TEST(Cli, Verification) {
    const auto t = run_cli({"verify-theorem", "--e", "2", "--charge", "0,0", "--mu", "[[1],[3,1]]", "--k", "auto"});
    EXPECT_EQ(t.status, 0) << t.err;
    EXPECT_TRUE(contains(t.out, "THEOREM e=2→3 mu=((1),(3,1)) k=(1,5) d=1 : EQUAL (6 terms)"));
    const auto c = run_cli({"verify-conjecture", "--e", "3", "--charge", "2,1", "--mu", "[[2,1],[1]]", "--d", "2"});
    EXPECT_EQ(c.status, 0) << c.err;
    EXPECT_TRUE(contains(c.out, "CONJECTURE e=3→4 mu=((2,1),(1)) d=2 : EQUAL (3 terms)"));
    const auto j = run_cli({"verify-theorem", "--e", "2", "--charge", "0", "--mu", "[3,1]", "--k", "3", "--format",
                            "json"});
    ASSERT_EQ(j.status, 0) << j.err;
    EXPECT_EQ(nlohmann::json::parse(j.out)["verdict"], "equal");
}

TEST(Cli, Sweep) {
    const auto r = run_cli({"sweep", "--e", "2,3", "--r", "2", "--n", "3"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_TRUE(contains(r.out, " 0 not equal"));
    const auto again = run_cli({"sweep", "--e", "2,3", "--r", "2", "--n", "3", "--jobs", "4"});
    EXPECT_EQ(again.out, r.out);
    const auto conj = run_cli({"sweep", "--conjecture", "--e", "2", "--r", "2", "--n", "3"});
    EXPECT_EQ(conj.status, 0) << conj.err;
}

TEST(Cli, Abacus) {
    const auto r = run_cli({"abacus", "--e", "3", "--beads", "5,4", "--mu", "[[2,1],[1]]"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "component 2, 4 beads"));
    EXPECT_TRUE(contains(r.out, "core of component 2: (1)"));
}

TEST(Cli, UsageErrorsExitTwo) {
    const std::vector<std::vector<std::string>> bad{
        {"canbasis", "--e", "2", "--charge", "0,0", "--mu", "[[1,1],[3,1]]"},
        {"canbasis", "--e", "2", "--charge", "0,0", "--mu", "[[1],[3,1]"},
        {"canbasis", "--e", "2", "--charge", "0", "--mu", "[[1],[3,1]]"},
        {"canbasis", "--e", "1", "--charge", "0", "--mu", "[1]"},
        {"canbasis", "--e", "2,3", "--charge", "0", "--mu", "[1]"},
        {"canbasis", "--e", "2", "--charge", "0", "--mu", "[1]", "--format", "latex"},
        {"runner-add", "--e", "4", "--beads", "11,9,12", "--k", "3,8,6", "--mu", "[[4,3,2],[2,2],[3]]"},
        {"runner-add", "--e", "3", "--beads", "1", "--k", "2", "--mu", "[2,2]"},
        {"verify-theorem", "--e", "2", "--charge", "0,0", "--mu", "[[1],[3,1]]", "--k", "5,5"},
        {"verify-conjecture", "--e", "3", "--charge", "2,1", "--mu", "[[2,1],[1]]"},
        {"verify-conjecture", "--e", "3", "--charge", "2,1", "--mu", "[[2,1],[1]]", "--d", "3"},
        {"nosuchcommand"},
        {"canbasis", "--bogus"},
    };
    for (const auto& args : bad) {
        const auto r = run_cli(args);
        EXPECT_EQ(r.status, 2) << args[0] << " " << (args.size() > 1 ? args.back() : "");
        EXPECT_FALSE(r.err.empty());
    }
}

TEST(Cli, HelpExitsZeroAndMentionsQ) {
    const auto r = run_cli({"--help"});
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out + r.err, "canbasis"));
    const auto sub = run_cli({"canbasis", "--help"});
    EXPECT_EQ(sub.status, 0);
    EXPECT_TRUE(contains(sub.out + sub.err, "written q"));
}

TEST(Cli, ParseArgsProducesValidatedConfig) {
    const auto config = cli::parse_args({"verify-theorem", "--e", "2", "--charge", "0,0", "--mu", "[[1],[3,1]]",
                                         "--k", "auto", "--paranoid"});
    EXPECT_EQ(config.command, cli::Command::VerifyTheorem);
    EXPECT_FALSE(config.k.has_value());
    EXPECT_TRUE(config.paranoid);
    EXPECT_NO_THROW(cli::validate(config));
    auto broken = config;
    broken.charge = std::vector<int>{0};
    EXPECT_THROW(cli::validate(broken), cli::UsageError);
}
