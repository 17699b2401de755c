#include <gtest/gtest.h>

#include <random>

#include "akfock/abacus.hpp"
#include "akfock/fock.hpp"
#include "akfock/runner.hpp"
#include "oracles.hpp"

using namespace akfock;

namespace {

using MP = Multipartition;
using P = Partition;

const LaurentPoly v = LaurentPoly::monomial(1);

FockVector vec(const Multicharge& s, std::initializer_list<std::pair<MP, LaurentPoly>> terms) {
    FockVector out(s);
    for (const auto& [m, c] : terms) out.add_term(m, c);
    return out;
}

FockVector random_vector(std::mt19937& rng, const Multicharge& s, int max_size) {
    FockVector out(s);
    std::uniform_int_distribution<int> coeff(-3, 3), count(1, 4);
    for (int t = count(rng); t > 0; --t) {
        const auto m = oracle::random_multipartition(rng, s.level(), max_size);
        out.add_term(m, LaurentPoly::monomial(coeff(rng), coeff(rng)));
    }
    return out;
}

}  // namespace

TEST(FockVector, AddAndCancel) {
    const Multicharge s({0, 0}, 2);
    FockVector a(s);
    a.add_term(MP{P{1}, P{}}, v);
    a.add_term(MP{P{}, P{1}}, 1);
    a.add_term(MP{P{1}, P{}}, -v);
    EXPECT_EQ(a.term_count(), 1u);
    EXPECT_EQ(a.coeff(MP{P{}, P{1}}), LaurentPoly(1));
    EXPECT_TRUE(a.coeff(MP{P{1}, P{}}).is_zero());
    FockVector b = a;
    b -= a;
    EXPECT_TRUE(b.is_zero());
    EXPECT_THROW(a += FockVector(Multicharge({0, 1}, 2)), std::invalid_argument);
}

TEST(FockVector, TermsIterateInDescendingLexOrder) {
    const Multicharge s({0}, 2);
    const auto a = vec(s, {{MP{P{2, 1, 1}}, 1}, {MP{P{3, 1}}, 1}, {MP{P{2, 2}}, 1}});
    std::vector<MP> order;
    for (const auto& [m, c] : a.terms()) order.push_back(m);
    EXPECT_EQ(order, (std::vector<MP>{MP{P{3, 1}}, MP{P{2, 2}}, MP{P{2, 1, 1}}}));
    EXPECT_EQ(to_string(vec(s, {{MP{P{3, 1}}, 1}, {MP{P{2, 2}}, v}, {MP{P{2, 1, 1}}, v * v + 1}})),
              "((3,1)) + v((2,2)) + (1 + v^2)((2,1,1))");
}

TEST(Action, LadderWordOfThreeOne) {
    const Multicharge s({0}, 2);
    const OperatorWord w{2, {{0, 1}, {1, 2}, {0, 1}}};
    EXPECT_EQ(to_string(w), "f0 f1^(2) f0");
    EXPECT_EQ(ladder_word(P{3, 1}, 2, 0), w);
    const auto expected = vec(s, {{MP{P{3, 1}}, 1}, {MP{P{2, 2}}, v}, {MP{P{2, 1, 1}}, v * v}});
    EXPECT_EQ(apply_word(FockVector::basis(MP{P{}}, s), w), expected);
}

TEST(Action, AuxiliaryVectorOfLevelTwoExample) {
    const Multicharge s({0, 0}, 2);
    const auto g = vec(s, {{MP{P{}, P{3, 1}}, 1}, {MP{P{}, P{2, 2}}, v}, {MP{P{}, P{2, 1, 1}}, v * v}});
    const auto a = apply_f(g, 0, 1);
    const auto v2 = v * v, v3 = v2 * v, v4 = v2 * v2;
    const auto expected = vec(s, {{MP{P{1}, P{3, 1}}, 1},
                                  {MP{P{1}, P{2, 2}}, v},
                                  {MP{P{1}, P{2, 1, 1}}, v2},
                                  {MP{P{}, P{3, 2}}, v2 + 1},
                                  {MP{P{}, P{3, 1, 1}}, v3 + v},
                                  {MP{P{}, P{2, 2, 1}}, v4 + v2}});
    EXPECT_EQ(a, expected);
}

TEST(Action, EmptyWordIsIdentityAndOverlongPowerIsZero) {
    const Multicharge s({0, 1}, 3);
    const auto b = FockVector::basis(MP{P{2}, P{1}}, s);
    EXPECT_EQ(apply_word(b, OperatorWord{3, {}}), b);
    EXPECT_TRUE(apply_f(b, 0, 5).is_zero());
    EXPECT_TRUE(apply_f(FockVector::basis(MP{P{}}, Multicharge({0}, 2)), 1, 1).is_zero());
    EXPECT_THROW(apply_word(b, OperatorWord{4, {{0, 1}}}), std::invalid_argument);
}

TEST(NCoefficient, Examples) {
    const Multicharge s({0, 0}, 2);
    EXPECT_EQ(n_coefficient(MP{P{}, P{3, 1}}, MP{P{1}, P{3, 1}}, 0, s), 0);
    EXPECT_EQ(n_coefficient(MP{P{}, P{3, 1}}, MP{P{}, P{3, 2}}, 0, s), 0);
    EXPECT_EQ(n_coefficient(MP{P{}, P{2, 2}}, MP{P{}, P{3, 2}}, 0, s), 1);
    EXPECT_EQ(n_coefficient(MP{P{}, P{3, 1}}, MP{P{}, P{3, 1, 1}}, 0, s), 1);
    EXPECT_THROW(n_coefficient(MP{P{}, P{3, 1}}, MP{P{}, P{3, 1, 1}}, 1, s), std::invalid_argument);
    EXPECT_THROW(n_coefficient(MP{P{}, P{3, 1}}, MP{P{}, P{3, 1}}, 0, s), std::invalid_argument);
    EXPECT_THROW(n_coefficient(MP{P{}, P{3, 1}}, MP{P{1}, P{4, 1}}, 1, s), std::invalid_argument);
}

TEST(NCoefficient, ComponentwiseFormulaAgrees) {
    for (int e = 2; e <= 3; ++e)
        for (int r = 1; r <= 3; ++r)
            for (int c = 0; c < e * e; ++c) {
                std::vector<int> entries;
                for (int j = 0, x = c; j < r; ++j, x /= e) entries.push_back(x % e);
                const Multicharge s(entries, e);
                for (int n = 0; n <= (r == 3 ? 3 : 4); ++n)
                    for (const auto& lambda : multipartitions_of(n, r))
                        for (int i = 0; i < e; ++i)
                            for (int m = 1; m <= 3; ++m) {
                                const auto image = apply_f(FockVector::basis(lambda, s), i, m);
                                for (const auto& [xi, coeff] : image.terms()) {
                                    const int nn = n_coefficient(lambda, xi, i, s);
                                    EXPECT_EQ(nn, n_coefficient_by_components(lambda, xi, i, s));
                                    EXPECT_EQ(coeff, LaurentPoly::monomial(nn));
                                }
                            }
            }
}

TEST(Action, SingleStepMatchesDefinition) {
    std::mt19937 rng(8);
    for (int t = 0; t < 300; ++t) {
        const int e = 2 + t % 3, r = 1 + t % 3;
        std::vector<int> entries;
        for (int j = 0; j < r; ++j) entries.push_back(static_cast<int>(rng() % 7) - 3);
        const Multicharge s(entries, e);
        const auto x = random_vector(rng, s, 4);
        for (int i = 0; i < e; ++i) EXPECT_EQ(apply_f(x, i, 1), oracle::f_once(x, i)) << to_string(x);
    }
}

TEST(Action, DividedPowerTimesFactorial) {
    std::mt19937 rng(9);
    for (int t = 0; t < 100; ++t) {
        const int e = 2 + t % 3, r = 1 + t % 2;
        const Multicharge s(std::vector<int>(static_cast<std::size_t>(r), t % e), e);
        const auto x = random_vector(rng, s, 4);
        for (int i = 0; i < e; ++i)
            for (int m = 1; m <= 3; ++m) {
                FockVector repeated = x;
                for (int step = 0; step < m; ++step) repeated = oracle::f_once(repeated, i);
                EXPECT_EQ(repeated, apply_f(x, i, m).scaled(quantum_factorial(m)));
            }
    }
}

TEST(TranslateWord, Examples) {
    EXPECT_EQ(translate_word(OperatorWord{2, {{0, 1}}}, 0), (OperatorWord{3, {{0, 1}, {1, 1}}}));
    EXPECT_EQ(translate_word(OperatorWord{3, {{1, 2}}}, 2), (OperatorWord{4, {{1, 2}}}));
    EXPECT_EQ(translate_word(OperatorWord{3, {{2, 1}, {0, 3}, {1, 2}}}, 1),
              (OperatorWord{4, {{3, 1}, {0, 3}, {1, 2}, {2, 2}}}));
    EXPECT_EQ(translate_word(OperatorWord{3, {}}, 0), (OperatorWord{4, {}}));
    EXPECT_THROW(translate_word(OperatorWord{3, {}}, 3), std::invalid_argument);
}

namespace {

struct CommutationCounts {
    int off_column = 0;
    int on_column = 0;
};

// Checks (f_i^(m) λ)^{+k} against the translated word applied to λ^{+k}.
CommutationCounts check_commutation(int instances, std::uint32_t seed) {
    std::mt19937 rng(seed);
    CommutationCounts done;
    int attempts = 0;
    while (done.off_column + done.on_column < instances && attempts < 100 * instances) {
        ++attempts;
        const int e = 2 + static_cast<int>(rng() % 3), r = 1 + static_cast<int>(rng() % 3);
        const auto lambda = oracle::random_multipartition(rng, r, 4);
        const int i = static_cast<int>(rng() % static_cast<unsigned>(e));
        const int m = 1 + static_cast<int>(rng() % 2);
        const int d = static_cast<int>(rng() % static_cast<unsigned>(e));
        std::vector<int> beads, k;
        for (int j = 0; j < r; ++j) {
            beads.push_back(lambda[j].length() + m + static_cast<int>(rng() % 4));
            k.push_back(mod(d - beads.back(), e) + e * static_cast<int>(rng() % 4));
        }
        const Multicharge s(beads, e);
        const auto ins = make_runner_insertion(beads, k, e);
        if (i == d && !last_bead_condition(lambda, beads, e, ins)) continue;
        const auto x = FockVector::basis(lambda, s);
        const auto lhs = plus_k_vector(apply_f(x, i, m), beads, k);
        const auto rhs = apply_word(plus_k_vector(x, beads, k), translate_word(OperatorWord{e, {{i, m}}}, d));
        EXPECT_EQ(lhs, rhs) << to_string(lambda) << " e=" << e << " i=" << i << " m=" << m << " d=" << d;
        ++(i == d ? done.on_column : done.off_column);
    }
    return done;
}

}  // namespace

TEST(RunnerCommutation, FullRunnerCommutesWithInduction) {
    const auto done = check_commutation(300, 42);
    EXPECT_EQ(done.off_column + done.on_column, 300);
    EXPECT_GT(done.on_column, 20);
}
