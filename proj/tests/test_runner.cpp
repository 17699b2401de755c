#include <gtest/gtest.h>

#include "akfock/runner.hpp"

using namespace akfock;

namespace {

using MP = Multipartition;
using P = Partition;

const LaurentPoly v = LaurentPoly::monomial(1);

std::vector<Multicharge> binary_charges(int r, int e) {
    std::vector<Multicharge> out;
    for (int bits = 0; bits < (1 << r); ++bits) {
        std::vector<int> s;
        for (int j = r - 1; j >= 0; --j) s.push_back((bits >> j) & 1);
        out.emplace_back(s, e);
    }
    return out;
}

}  // namespace

TEST(PlusKVector, RelabelsTermwise) {
    const auto g = llt_level1(P{3, 1}, 2, 0);
    const std::vector<int> beads{4};
    const auto image = plus_k_vector(g.vector, beads, {3});
    EXPECT_EQ(image.e(), 3);
    EXPECT_EQ(image.term_count(), 3u);
    for (const auto& [label, c] : g.vector.terms()) {
        const auto mapped = add_full_runner_partition(label[0], 4, 2, 3).partition;
        EXPECT_EQ(image.coeff(MP{mapped}), c);
    }
    const auto same = plus_k_vector(FockVector::basis(MP{P{}}, Multicharge({1}, 3)), {4}, {2});
    EXPECT_EQ(same.terms().begin()->first, (MP{P{}}));
    EXPECT_TRUE(plus_k_vector(FockVector(Multicharge({0}, 2)), {4}, {3}).is_zero());
    EXPECT_THROW(plus_k_vector(g.vector, {5}, {3}), std::invalid_argument);
}

TEST(FullRunnerTheorem, LevelOne) {
    BasisCache cache;
    const auto rep = verify_full_runner(MP{P{3, 1}}, Multicharge({0}, 2), std::vector<int>{3}, cache);
    EXPECT_TRUE(rep.equal);
    EXPECT_TRUE(rep.diffs.empty());
    EXPECT_EQ(rep.lhs, rep.rhs);
    EXPECT_EQ(rep.rhs.term_count(), 3u);
}

TEST(FullRunnerTheorem, LevelTwoAuto) {
    BasisCache cache;
    const auto rep = verify_full_runner(MP{P{1}, P{3, 1}}, Multicharge({0, 0}, 2), std::nullopt, cache);
    EXPECT_TRUE(rep.equal);
    EXPECT_EQ(rep.k, (std::vector<int>{1, 5}));
    EXPECT_EQ(rep.d, 1);
    EXPECT_EQ(rep.summary(), "THEOREM e=2→3 mu=((1),(3,1)) k=(1,5) d=1 : EQUAL (6 terms)");
}

TEST(FullRunnerTheorem, EmptyMultipartition) {
    BasisCache cache;
    for (int r = 1; r <= 2; ++r)
        for (int k = 0; k <= 6; ++k) {
            const auto mu = MP::empty_of_level(r);
            const Multicharge s(std::vector<int>(static_cast<std::size_t>(r), 0), 2);
            std::vector<int> kk{k};
            if (r == 2) kk.push_back(k + 2);
            const auto rep = verify_full_runner(mu, s, kk, cache);
            EXPECT_TRUE(rep.equal);
            EXPECT_EQ(rep.lhs.term_count(), 1u);
            EXPECT_EQ(rep.image[0], empty_plus_k_closed_form(2, k));
        }
}

TEST(FullRunnerTheorem, RejectsInadmissibleK) {
    BasisCache cache;
    const Multicharge s({0, 0}, 2);
    EXPECT_THROW(verify_full_runner(MP{P{1}, P{3, 1}}, s, std::vector<int>{5, 5}, cache), std::invalid_argument);
    EXPECT_THROW(verify_full_runner(MP{P{1}, P{3, 1}}, s, std::vector<int>{1, 6}, cache), std::invalid_argument);
    EXPECT_THROW(verify_full_runner(MP{P{1, 1}, P{}}, s, std::nullopt, cache), std::invalid_argument);
}

TEST(FullRunnerTheorem, SmallSweep) {
    int checked = 0;
    for (int e = 2; e <= 3; ++e)
        for (int r = 1; r <= 2; ++r)
            for (const auto& s : binary_charges(r, e)) {
                BasisCache cache;
                for (int n = 0; n <= 4; ++n)
                    for (const auto& mu : multipartitions_of(n, r)) {
                        if (!is_e_multiregular(mu, e)) continue;
                        const auto rep = verify_full_runner(mu, s, std::nullopt, cache);
                        EXPECT_TRUE(rep.equal) << rep.summary();
                        ++checked;
                    }
            }
    EXPECT_GT(checked, 200);
}

TEST(FullRunnerTheorem, LargerKStillAgrees) {
    BasisCache cache;
    const Multicharge s({1, 0}, 2);
    const MP mu{P{2}, P{1}};
    const auto beads = default_bead_counts(mu, s);
    auto k = suggest_min_k(mu, beads, 2);
    for (int step = 0; step < 3; ++step) {
        EXPECT_TRUE(verify_full_runner(mu, s, k, cache).equal) << "k=" << k[0] << "," << k[1];
        k[0] += 2;
        k[1] += 4;
    }
}

TEST(EmptyRunner, ExampleAtThreeAndFour) {
    BasisCache cache;
    const auto rep = verify_empty_runner(MP{P{2, 1}, P{1}}, std::nullopt, Multicharge({2, 1}, 3), 2, cache);
    EXPECT_TRUE(rep.equal);
    EXPECT_EQ(rep.image, (MP{P{4, 2, 1}, P{2, 1}}));
    EXPECT_EQ(rep.image_charge.residues(), (std::vector<int>{1, 0}));
    FockVector expected(rep.image_charge);
    expected.add_term(MP{P{4, 2, 1}, P{2, 1}}, 1);
    expected.add_term(MP{P{3, 2, 2}, P{2, 1}}, v);
    expected.add_term(MP{P{3, 2, 1}, P{2, 2}}, v * v);
    EXPECT_EQ(rep.lhs, expected);
    EXPECT_EQ(rep.rhs, expected);
    EXPECT_TRUE(rep.extra_labels.empty());
    EXPECT_EQ(rep.summary(), "CONJECTURE e=3→4 mu=((2,1),(1)) d=2 : EQUAL (3 terms)");
}

TEST(EmptyRunner, SingleRowAndEmpty) {
    BasisCache cache;
    const Multicharge s({2, 1}, 3);
    const auto row = verify_empty_runner(MP{P{2, 1}, P{1}}, MP{P{1, 1, 1}, P{1}}, s, 2, cache);
    EXPECT_TRUE(row.equal);
    const auto empty = verify_empty_runner(MP{P{}, P{}}, std::nullopt, s, 0, cache);
    EXPECT_TRUE(empty.equal);
    EXPECT_EQ(empty.rhs.term_count(), 1u);
}

TEST(EmptyRunner, SmallSweepAtLevelTwo) {
    int unequal = 0, checked = 0;
    for (const auto& s : binary_charges(2, 2)) {
        BasisCache cache;
        for (int n = 0; n <= 5; ++n)
            for (const auto& mu : multipartitions_of(n, 2)) {
                if (!is_e_multiregular(mu, 2)) continue;
                for (int d = 0; d < 2; ++d) {
                    unequal += !verify_empty_runner(mu, std::nullopt, s, d, cache).equal;
                    ++checked;
                }
            }
    }
    EXPECT_GT(checked, 0);
    EXPECT_EQ(unequal, 0);
}

TEST(EmptyRunnerPrefix, PrefixDoesNotChangeCoefficients) {
    BasisCache cache;
    const Multicharge s({0, 0}, 2);
    const MP mu{P{}, P{3, 1}};
    for (const auto& k : {std::vector<int>{0, 4}, {1, 5}, {3, 7}, {5, 9}, {6, 12}})
        EXPECT_TRUE(verify_empty_runner_prefix(mu, s, k, cache)) << k[0] << "," << k[1];
    EXPECT_TRUE(verify_empty_runner_prefix(MP{P{}, P{}}, s, {4, 6}, cache));
    EXPECT_THROW(verify_empty_runner_prefix(MP{P{1}, P{}}, s, {1, 4}, cache), std::invalid_argument);
    EXPECT_THROW(verify_empty_runner_prefix(mu, s, {0, 2}, cache), std::invalid_argument);
}

TEST(EmptyRunnerPrefix, InductionWordThroughRunners) {
    // The induction word for ∅^{+k1}, with residues taken from the image
    // multicharge, sends (∅, rest^{+k}) to (∅^{+k1}, rest^{+k}).
    int checked = 0;
    for (int e = 2; e <= 3; ++e)
        for (int n = 0; n <= 4; ++n)
            for (const auto& rest : partitions_of(n))
                for (int k1 = 0; k1 <= 3 * e + 2; ++k1) {
                    const MP mu{P{}, rest};
                    const Multicharge s({0, 1}, e);
                    const auto beads = default_bead_counts(mu, s);
                    const int low = k1 + rest.part(1) + e - 1;
                    const int k2 = low + mod(k1 + beads[0] - beads[1] - low, e);
                    const std::vector<int> k{k1, k2};
                    ASSERT_TRUE(check_k_conditions(mu, k, e));
                    const auto image = add_full_runner_multi(mu, beads, e, k);
                    const auto start = FockVector::basis(image.multipartition.with_component(0, P{}), image.charge);
                    const auto word = induction_sequence_empty(e, k1, image.charge.residue(0));
                    EXPECT_EQ(apply_word(start, word), FockVector::basis(image.multipartition, image.charge))
                        << to_string(mu) << " e=" << e << " k1=" << k1;
                    ++checked;
                }
    EXPECT_GT(checked, 50);
}

TEST(SameCoefficients, TranslatedLadderWordOnPrefixedVector) {
    // f = ladder word of μ^(1); then F·G_{e+1}((∅, rest)^{+k}) = (f·G_e((∅, rest)))^{+k}.
    int checked = 0;
    for (int e = 2; e <= 3; ++e)
        for (const auto& s : binary_charges(2, e)) {
            BasisCache cache;
            for (int n = 1; n <= 4; ++n)
                for (const auto& mu : multipartitions_of(n, 2)) {
                    if (mu[0].empty() || !is_e_multiregular(mu, e)) continue;
                    const auto beads = default_bead_counts(mu, s);
                    const auto k = suggest_min_k(mu, beads, e);
                    const auto ins = make_runner_insertion(beads, k, e);
                    const auto mu0 = mu.with_component(0, P{});
                    const auto f = ladder_word(mu[0], e, s.residue(0));
                    const auto lower = fayers_canonical_basis(mu0, s, cache);
                    const auto image = add_full_runner_multi(mu0, beads, e, k);
                    const auto upper = fayers_canonical_basis(image.multipartition, image.charge, cache);
                    EXPECT_EQ(apply_word(upper.vector, translate_word(f, ins.d)),
                              plus_k_vector(apply_word(lower.vector, f), beads, k))
                        << to_string(mu) << " e=" << e;
                    ++checked;
                }
        }
    EXPECT_GT(checked, 30);
}
