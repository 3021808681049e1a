#include <gtest/gtest.h>

#include <random>

#include "ortho/cyclotomic.hpp"

using namespace ortho;

namespace {

CycInt random_cyc(std::uint32_t p, std::mt19937& rng) {
    CycInt z(p);
    for (std::uint32_t i = 0; i < p; ++i) z.add_root_power(i, int(rng() % 21) - 10);
    return z;
}

}  // namespace

TEST(CycInt, RingAxiomsRandomized) {
    std::mt19937 rng(5);
    for (std::uint32_t p : {3u, 5u, 7u}) {
        for (int it = 0; it < 30; ++it) {
            CycInt a = random_cyc(p, rng), b = random_cyc(p, rng), c = random_cyc(p, rng);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
        }
    }
}

TEST(CycInt, ConjugationIsInvolution) {
    std::mt19937 rng(6);
    for (std::uint32_t p : {3u, 5u, 11u}) {
        for (int it = 0; it < 20; ++it) {
            CycInt a = random_cyc(p, rng);
            EXPECT_EQ(a.conj().conj(), a);
        }
    }
}

TEST(GaussSum, ClosedFormSpotValues) {
    // p = 5, e = 1: + sqrt(5), real
    GaussValue g5 = gauss_sum_quadratic(field_create(5, 1));
    EXPECT_EQ(g5.sign, 1);
    EXPECT_FALSE(g5.imaginary);
    EXPECT_EQ(g5.magnitude_sq, BigInt(5));
    // p = 3, e = 1: + i sqrt(3)
    GaussValue g3 = gauss_sum_quadratic(field_create(3, 1));
    EXPECT_EQ(g3.sign, 1);
    EXPECT_TRUE(g3.imaginary);
    // p = 3, e = 2: sign (-1)^1 * i^2 = +1, value +3
    GaussValue g9 = gauss_sum_quadratic(field_create(3, 2));
    EXPECT_EQ(g9.sign, 1);
    EXPECT_FALSE(g9.imaginary);
    CycInt as_cyc = g9.to_cyclotomic();
    EXPECT_EQ(as_cyc, CycInt(3, 3));
    EXPECT_THROW(gauss_sum_quadratic(field_create(2, 1)), std::domain_error);
}

TEST(GaussSum, ClosedFormEqualsBruteForceForAllSmallFields) {
    // every odd prime power p^d <= 3^6
    for (std::uint32_t p = 3; p <= 729; p += 2) {
        if (!is_prime_u64(p)) continue;
        std::uint64_t q = p;
        for (std::uint32_t d = 1; q <= 729; ++d, q *= p) {
            const Field& f = field_create(p, d);
            EXPECT_EQ(gauss_sum_quadratic(f).to_cyclotomic(), gauss_sum_brute(f))
                << "q = " << p << "^" << d;
            if (q > 729 / p) break;
        }
    }
}

TEST(GaussSum, NormSquaredIsQ) {
    for (auto [p, d] : {std::pair{3u, 3u}, {5u, 2u}, {7u, 1u}}) {
        const Field& f = field_create(p, d);
        EXPECT_EQ(gauss_sum_brute(f).norm_squared(), big_pow(p, d));
    }
}

TEST(WeilSum, SpotValueOverGf3) {
    const Field& f3 = field_create(3, 1);
    CycInt w = weil_sum(f3, 1, 0, 0);  // f(c) = c^2
    CycInt expect(3);
    expect.add_root_power(0, 1);
    expect.add_root_power(1, 2);  // 1 + 2 zeta
    EXPECT_EQ(w, expect);
    EXPECT_EQ(w, weil_sum_brute(f3, 1, 0, 0));
    EXPECT_THROW(weil_sum(f3, 0, 1, 1), std::invalid_argument);
}

TEST(WeilSum, ClosedFormEqualsDirectSummation) {
    std::mt19937 rng(17);
    for (auto [p, d] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 2u}, {7u, 1u}}) {
        const Field& f = field_create(p, d);
        for (int it = 0; it < 200; ++it) {
            Elem a2 = Elem(1 + rng() % (f.q() - 1));
            Elem a1 = Elem(rng() % f.q());
            Elem a0 = Elem(rng() % f.q());
            ASSERT_EQ(weil_sum(f, a2, a1, a0), weil_sum_brute(f, a2, a1, a0));
            ASSERT_EQ(weil_sum(f, a2, a1, a0).norm_squared(), big_pow(p, d));
        }
    }
}

TEST(Walsh, ZeroFunctionSpectrum) {
    const Field& f = field_create(3, 2);
    FunctionTable zero{&f, std::vector<Elem>(f.q(), 0)};
    EXPECT_EQ(walsh_transform(zero, 0), CycInt(3, 9));
    for (Elem b = 1; b < f.q(); ++b) EXPECT_TRUE(walsh_transform(zero, b).is_zero());
}

TEST(Walsh, QuadraticTraceIsBentOverGf9) {
    const Field& f = field_create(3, 2);
    FunctionTable q = quadratic_trace_table(f);
    for (Elem b = 0; b < f.q(); ++b) EXPECT_EQ(walsh_transform(q, b).norm_squared(), BigInt(9));
}

TEST(Walsh, ParsevalExactForArbitraryTable) {
    const Field& f = field_create(3, 2);
    std::mt19937 rng(23);
    FunctionTable t{&f, {}};
    t.values.resize(f.q());
    for (auto& v : t.values) v = Elem(rng() % 3);
    BigInt sum = 0;
    for (Elem b = 0; b < f.q(); ++b) sum += walsh_transform(t, b).norm_squared();
    EXPECT_EQ(sum, big_pow(3, 4));  // p^(2m)
}

TEST(RfMembership, QuadraticTraceAccepted) {
    const Field& f81 = field_create(3, 4);
    FunctionTable q = quadratic_trace_table(f81);
    BentRejection why;
    auto prof = rf_membership(q, &why);
    ASSERT_TRUE(prof.has_value()) << why.clause;
    EXPECT_EQ(prof->h, 2u);
    EXPECT_TRUE(prof->epsilon == 1 || prof->epsilon == -1);
    // dual is itself weakly regular with the displayed spectrum form
    for (Elem b = 0; b < f81.q(); ++b) EXPECT_LT(prof->dual.values[b], 3u);
}

TEST(RfMembership, LinearTraceRejected) {
    const Field& f = field_create(3, 4);
    FunctionTable lin{&f, {}};
    lin.values.resize(f.q());
    for (std::uint64_t x = 0; x < f.q(); ++x) lin.values[x] = f.trace_to_prime(Elem(x));
    BentRejection why;
    EXPECT_FALSE(rf_membership(lin, &why).has_value());
}

TEST(RfMembership, NonzeroAtOriginRejected) {
    const Field& f = field_create(3, 4);
    FunctionTable t = quadratic_trace_table(f);
    t.values[0] = 1;
    BentRejection why;
    EXPECT_FALSE(rf_membership(t, &why).has_value());
    EXPECT_EQ(why.clause, "f(0) != 0");
}
