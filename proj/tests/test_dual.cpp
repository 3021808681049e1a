#include <gtest/gtest.h>

#include <random>

#include "ortho/bounds.hpp"
#include "ortho/dual.hpp"
#include "ortho/weights.hpp"

using namespace ortho;

namespace {

LinearCode random_code(const Field& f, std::size_t n, std::size_t rows, std::mt19937& rng) {
    std::vector<Row> g(rows, Row(n));
    for (auto& r : g)
        for (auto& x : r) x = Elem(rng() % f.q());
    return LinearCode(f, std::move(g));
}

}  // namespace

TEST(MacWilliams, WholeSpaceAndZeroCodeAreDualPair) {
    const Field& f = field_create(3, 1);
    LinearCode whole(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    WeightDistribution wd = weight_distribution(whole);
    DualSummary dual = macwilliams(wd);
    EXPECT_EQ(dual.distribution.k, 0u);
    EXPECT_EQ(dual.distribution.counts.size(), 1u);
    EXPECT_EQ(dual.distribution.counts.at(0), BigInt(1));

    WeightDistribution zero = weight_distribution(LinearCode::zero(f, 3));
    DualSummary back = macwilliams(zero);
    EXPECT_EQ(back.distribution, wd);
}

TEST(MacWilliams, TransformIsInvolution) {
    std::mt19937 rng(31);
    for (int it = 0; it < 10; ++it) {
        LinearCode c = random_code(field_create(3, 1), 8, 3, rng);
        WeightDistribution wd = weight_distribution(c);
        DualSummary d1 = macwilliams(wd);
        DualSummary d2 = macwilliams(d1.distribution);
        EXPECT_EQ(d2.distribution, wd);
    }
}

TEST(MacWilliams, MatchesBruteForceDualEnumeration) {
    std::mt19937 rng(37);
    for (int it = 0; it < 8; ++it) {
        LinearCode c = random_code(field_create(3, 1), 9, 4, rng);
        WeightDistribution wd = weight_distribution(c);
        DualSummary dual = macwilliams(wd);
        EXPECT_EQ(dual.distribution, dual_distribution_brute(c));
    }
    // and over a non-prime field
    LinearCode c9 = random_code(field_create(3, 2), 5, 2, rng);
    EXPECT_EQ(macwilliams(weight_distribution(c9)).distribution, dual_distribution_brute(c9));
}

TEST(MacWilliams, InconsistentInputIsHardError) {
    WeightDistribution bad;
    bad.n = 4;
    bad.k = 2;
    bad.q = 3;
    bad.counts[0] = 1;
    bad.counts[3] = 7;  // total != q^k
    EXPECT_THROW(macwilliams(bad), std::domain_error);
}

TEST(Pless, HoldsWithTrueDualCoefficients) {
    std::mt19937 rng(41);
    LinearCode c = random_code(field_create(3, 1), 8, 3, rng);
    WeightDistribution wd = weight_distribution(c);
    WeightDistribution dual = dual_distribution_brute(c);  // 3^5 codewords
    auto at = [&](std::size_t w) { return dual.counts.count(w) ? dual.counts.at(w) : BigInt(0); };
    PlessResult r = pless_verify(wd, at(1), at(2), at(3));
    EXPECT_TRUE(r.pass) << "violated identity " << r.first_violated;
    PlessResult wrong = pless_verify(wd, at(1), at(2), at(3) + 1);
    EXPECT_FALSE(wrong.pass);
    EXPECT_EQ(wrong.first_violated, 4);
}

TEST(Pless, ZeroCodeAgainstFullSpaceDual) {
    const Field& f = field_create(3, 1);
    WeightDistribution wd = weight_distribution(LinearCode::zero(f, 3));
    // dual = full space: A1 = n(q-1) = 6, A2 = C(3,2)*4 = 12, A3 = 8
    PlessResult r = pless_verify(wd, BigInt(6), BigInt(12), BigInt(8));
    EXPECT_TRUE(r.pass);
}

TEST(LowWeightDualWords, FullSpaceHasNone) {
    const Field& f = field_create(3, 1);
    LinearCode whole(f, {{1, 0}, {0, 1}});
    auto words = low_weight_dual_words(whole, 2);
    EXPECT_TRUE(words.empty());
}

TEST(LowWeightDualWords, CountsMatchMacWilliams) {
    std::mt19937 rng(43);
    LinearCode c = random_code(field_create(3, 1), 10, 5, rng);
    WeightDistribution wd = weight_distribution(c);
    DualSummary dual = macwilliams(wd);
    auto words = low_weight_dual_words(c, 3);
    for (std::size_t w = 1; w <= 3; ++w) {
        BigInt expect = dual.distribution.counts.count(w) ? dual.distribution.counts.at(w) : BigInt(0);
        BigInt got = words.count(w) ? BigInt(words.at(w).size()) : BigInt(0);
        EXPECT_EQ(got, expect) << "weight " << w;
        if (words.count(w))
            for (const Row& word : words.at(w))
                for (const Row& b : c.basis()) EXPECT_EQ(c.dot(word, b), 0u);
    }
}

TEST(LowWeightDualWords, BudgetContract) {
    std::mt19937 rng(47);
    LinearCode c = random_code(field_create(3, 1), 30, 5, rng);
    EXPECT_THROW(low_weight_dual_words(c, 10, 1000), BudgetExceeded);
}

TEST(Bounds, GriesmerSpotValues) {
    // [9,3,6] over GF(3): 6 + 2 + 1 = 9, met
    BoundsReport r = bounds_audit(9, 3, 6, 3);
    EXPECT_EQ(r.griesmer_sum, BigInt(9));
    EXPECT_TRUE(r.griesmer_met);
    // [27,7,15]: 15+5+2+1+1+1+1 = 26 < 27, not met
    EXPECT_FALSE(bounds_audit(27, 7, 15, 3).griesmer_met);
}

TEST(Bounds, SpherePackingRule) {
    // [125,118,4] over GF(5): d+1 = 5 violates Hamming -> optimal
    EXPECT_EQ(bounds_audit(125, 118, 4, 5).sphere_packing_class, SpherePackingClass::kOptimal);
    // [125,118,3]: d+1 = 4 does not violate, d+2 = 5 does -> almost optimal
    EXPECT_EQ(bounds_audit(125, 118, 3, 5).sphere_packing_class, SpherePackingClass::kAlmostOptimal);
    // [81,74,4] over GF(3): optimal
    EXPECT_EQ(bounds_audit(81, 74, 4, 3).sphere_packing_class, SpherePackingClass::kOptimal);
    // low-rate codes are out of the rule's reach
    EXPECT_EQ(bounds_audit(21, 5, 12, 3).sphere_packing_class, SpherePackingClass::kNeither);
    EXPECT_THROW(bounds_audit(5, 6, 2, 3), std::invalid_argument);
}
