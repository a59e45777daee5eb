#include "oracles.hpp"

#include <slpcat/characters.hpp>

#include <gtest/gtest.h>

using namespace slpcat;

namespace {

FormalCharacter character_of(int n, std::initializer_list<std::pair<std::vector<int>, long long>> terms)
{
    FormalCharacter c(n);
    for (const auto& [w, m] : terms)
        c.add(Weight(w), m);
    return c;
}

} // namespace

TEST(WeylCharacter, Tautological)
{
    for (int n = 1; n <= 5; ++n) {
        FormalCharacter want(n);
        for (int i = 1; i <= n; ++i)
            want.add(Weight::unit(n, i), 1);
        EXPECT_EQ(weyl_character(Weight::unit(n, 1)), want);
    }
}

TEST(WeylCharacter, SmallExamples)
{
    EXPECT_EQ(weyl_character(parse_weight("1,1")), character_of(2, {{{1, 1}, 1}}));
    EXPECT_EQ(weyl_character(parse_weight("2,0")), character_of(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
    EXPECT_EQ(dimension(weyl_character(parse_weight("1,0,0"))), 3);
    EXPECT_EQ(dimension(weyl_character(parse_weight("2,0"))), 3);
    EXPECT_EQ(dimension(weyl_character(parse_weight("1,1,0"))), 3);
    EXPECT_THROW(weyl_character(parse_weight("0,1")), invalid_input);
}

TEST(WeylCharacter, NegativeEntriesUseDeterminantShift)
{
    // V* = Delta(0,...,0,-1) has weights -e_i.
    FormalCharacter want(3);
    for (int i = 1; i <= 3; ++i)
        want.add(Weight::zero(3) - Weight::unit(3, i), 1);
    EXPECT_EQ(weyl_character(parse_weight("0,0,-1")), want);
    // Twisting by det^k shifts every weight.
    const FormalCharacter base = weyl_character(parse_weight("2,1,0"));
    const FormalCharacter twisted = weyl_character(parse_weight("-1,-2,-3"));
    FormalCharacter shifted(3);
    for (const auto& [w, m] : base.terms())
        shifted.add(w.shifted(-3), m);
    EXPECT_EQ(twisted, shifted);
}

TEST(WeylCharacter, MatchesBruteForceFillings)
{
    for (int n = 1; n <= 3; ++n)
        for (const Partition& shape : partitions_up_to(5, n)) {
            const auto brute = oracle::brute_ssyt_character(shape, n);
            FormalCharacter want(n);
            for (const auto& [content, m] : brute)
                want.add(Weight(content), m);
            EXPECT_EQ(weyl_character(shape.to_weight(n)), want) << to_string(shape) << " n=" << n;
        }
}

TEST(WeylCharacter, DimensionIsHookContent)
{
    for (int n = 1; n <= 4; ++n)
        for (const Partition& shape : partitions_up_to(8, n)) {
            const auto ch = weyl_character(shape.to_weight(n));
            EXPECT_EQ(dimension(ch), oracle::hook_content_dimension(shape, n));
            EXPECT_EQ(dimension(ch), count_ssyt(shape, n));
        }
}

TEST(WeylCharacter, SymmetricUnderPermutations)
{
    for (int n = 2; n <= 4; ++n)
        for (const Weight& lam : dominant_weights(n, -1, 3)) {
            const auto ch = weyl_character(lam);
            for (const auto& [w, m] : ch.terms()) {
                std::vector<int> e = w.entries();
                std::sort(e.begin(), e.end());
                do
                    ASSERT_EQ(ch.multiplicity(Weight(e)), m);
                while (std::next_permutation(e.begin(), e.end()));
            }
        }
}

TEST(Alternant, Examples)
{
    EXPECT_EQ(alternant(parse_weight("1,0")), character_of(2, {{{1, 0}, 1}, {{0, 1}, -1}}));
    EXPECT_EQ(alternant(parse_weight("2,1")), character_of(2, {{{2, 1}, 1}, {{1, 2}, -1}}));
    EXPECT_TRUE(alternant(parse_weight("3,1,1")).is_zero());
    EXPECT_EQ(alternant(Weight::rho(3)).terms().size(), 6u);
    EXPECT_THROW(dimension(alternant(parse_weight("1,0"))), invalid_input);
}

TEST(WeylFormula, Holds)
{
    EXPECT_TRUE(verify_weyl_formula(parse_weight("1,0")));
    EXPECT_TRUE(verify_weyl_formula(parse_weight("2,1,0")));
    for (int n = 1; n <= 5; ++n)
        EXPECT_TRUE(verify_weyl_formula(Weight::zero(n)));
    for (int n = 1; n <= 4; ++n)
        for (const Partition& shape : partitions_up_to(6, n))
            EXPECT_TRUE(verify_weyl_formula(shape.to_weight(n))) << to_string(shape);
    EXPECT_TRUE(verify_weyl_formula(parse_weight("1,-1,-3")));
}

TEST(WeylFormula, DetectsWrongCharacter)
{
    // A character with one weight dropped is no longer a quotient of alternants.
    const Weight lam = parse_weight("2,1,0");
    FormalCharacter broken = weyl_character(lam);
    broken.add(parse_weight("1,1,1"), -1);
    EXPECT_NE(alternant(lam + Weight::rho(3)), broken * alternant(Weight::rho(3)));
}

TEST(Filtration, FExamples)
{
    EXPECT_EQ(tensor_filtration_F(parse_weight("1,0")), (std::vector<Weight>{parse_weight("2,0"), parse_weight("1,1")}));
    EXPECT_EQ(tensor_filtration_F(parse_weight("1,0,0"), Residue(3, 1)), std::vector<Weight>{parse_weight("2,0,0")});

    const Weight lam = parse_weight("18,16,15,15,12,7,7,5,0,-4,-8,-12,-15,-19");
    std::vector<Weight> want;
    for (int row : {6, 9, 10, 11, 12})
        want.push_back(lam.plus_unit(row));
    EXPECT_EQ(tensor_filtration_F(lam, Residue(5, 2)), want);
    EXPECT_THROW(tensor_filtration_F(parse_weight("0,1")), invalid_input);
}

TEST(Filtration, EIsDecreasingRowOrder)
{
    EXPECT_EQ(tensor_filtration_E(parse_weight("2,1,0")),
              (std::vector<Weight>{parse_weight("2,1,-1"), parse_weight("2,0,0"), parse_weight("1,1,0")}));
    // The worked example's '-' rows: 1, 5, 8, 13, 14.
    const Weight lam = parse_weight("18,16,15,15,12,7,7,5,0,-4,-8,-12,-15,-19");
    std::vector<Weight> want;
    for (int row : {14, 13, 8, 5, 1})
        want.push_back(lam.minus_unit(row));
    EXPECT_EQ(tensor_filtration_E(lam, Residue(5, 2)), want);
}

TEST(Filtration, ResidueClassesPartitionTheWhole)
{
    for (int p : {2, 3, 5})
        for (int n = 1; n <= 4; ++n)
            for (const Weight& lam : dominant_weights(n, -2, 3)) {
                std::vector<Weight> f, e;
                for (const Residue& a : residues(p)) {
                    auto fa = tensor_filtration_F(lam, a), ea = tensor_filtration_E(lam, a);
                    f.insert(f.end(), fa.begin(), fa.end());
                    e.insert(e.end(), ea.begin(), ea.end());
                }
                auto all_f = tensor_filtration_F(lam), all_e = tensor_filtration_E(lam);
                std::sort(f.begin(), f.end());
                std::sort(e.begin(), e.end());
                std::sort(all_f.begin(), all_f.end());
                std::sort(all_e.begin(), all_e.end());
                EXPECT_EQ(f, all_f);
                EXPECT_EQ(e, all_e);
            }
}

TEST(Filtration, OrderIsDecreasingInDominance)
{
    for (const Weight& lam : dominant_weights(4, 0, 3)) {
        const auto f = tensor_filtration_F(lam);
        for (std::size_t k = 1; k < f.size(); ++k)
            EXPECT_TRUE(dominance_leq(f[k], f[k - 1]));
    }
}

TEST(Pieri, Examples)
{
    EXPECT_TRUE(verify_pieri(parse_weight("1,0")));
    EXPECT_EQ(weyl_character(parse_weight("1,0")) * weyl_character(parse_weight("1,0")),
              weyl_character(parse_weight("2,0")) + weyl_character(parse_weight("1,1")));
    EXPECT_TRUE(verify_pieri(Weight::zero(3)));
    EXPECT_TRUE(verify_pieri(parse_weight("2,1,0")));
}

TEST(Pieri, AllSmallDominantWeights)
{
    for (int n = 1; n <= 4; ++n)
        for (const Weight& lam : dominant_weights(n, 0, 4)) {
            EXPECT_TRUE(verify_pieri(lam)) << to_string(lam);
            EXPECT_TRUE(verify_dual_pieri(lam)) << to_string(lam);
        }
}

TEST(CasimirScalar, Values)
{
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(casimir_scalar(Weight::unit(n, 1)), n);
        EXPECT_EQ(casimir_scalar(Weight::zero(n)), 0);
    }
}

TEST(CasimirScalar, AddingABoxShiftsByContent)
{
    for (int n = 1; n <= 4; ++n)
        for (const Weight& lam : dominant_weights(n, -3, 3))
            for (int i : addable_rows(lam))
                EXPECT_EQ(casimir_scalar(lam.plus_unit(i)) - casimir_scalar(lam), n + 2LL * (lam(i) + 1 - i));
}

TEST(CountSyt, HookLength)
{
    EXPECT_EQ(count_syt(Partition{}), 1);
    EXPECT_EQ(count_syt(Partition({2, 1})), 2);
    EXPECT_EQ(count_syt(Partition({3, 2})), 5);
    EXPECT_EQ(count_syt(Partition({3, 2, 1})), 16);
    // sum of (f^lambda)^2 over lambda |- d is d!
    for (int d = 0; d <= 8; ++d) {
        long long s = 0, fact = 1;
        for (int k = 2; k <= d; ++k)
            fact *= k;
        for (const Partition& l : partitions_of(d))
            s += count_syt(l) * count_syt(l);
        EXPECT_EQ(s, fact);
    }
}
