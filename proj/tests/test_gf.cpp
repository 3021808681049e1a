#include <gtest/gtest.h>

#include <random>

#include "ortho/gf.hpp"

using namespace ortho;

namespace {

// Test-local polynomial arithmetic, independent of the library's field
// internals.  Used as the oracle for the deterministic modulus search.
using Poly = std::vector<unsigned>;

Poly oracle_mulmod(const Poly& a, const Poly& b, const Poly& mod, unsigned p) {
    std::vector<unsigned> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + a[i] * b[j]) % p;
    std::size_t d = mod.size() - 1;
    for (std::size_t i = acc.size(); i-- > d;) {
        unsigned c = acc[i];
        if (!c) continue;
        for (std::size_t j = 0; j <= d; ++j) acc[i - d + j] = (acc[i - d + j] + p * p - c * mod[j] % p) % p;
    }
    acc.resize(d);
    return acc;
}

std::uint64_t oracle_order_of_x(const Poly& mod, unsigned p, std::uint64_t q) {
    Poly x{0, 1}, cur{0, 1};
    std::uint64_t ord = 1;
    Poly one{1};
    one.resize(mod.size() - 1, 0);
    cur.resize(mod.size() - 1, 0);
    Poly acc = cur;
    while (acc != one) {
        acc = oracle_mulmod(acc, x, mod, p);
        ++ord;
        if (ord > q) return 0;  // x not invertible or mod not irreducible
    }
    return ord;
}

}  // namespace

TEST(Field, PrimeFieldIsResidues) {
    const Field& f = field_create(3, 1);
    EXPECT_EQ(f.q(), 3u);
    EXPECT_EQ(f.add(1, 2), 0u);
    EXPECT_EQ(f.mul(2, 2), 1u);
    EXPECT_EQ(f.neg(1), 2u);
}

TEST(Field, NonPrimeRejected) { EXPECT_THROW(field_create(4, 2), std::invalid_argument); }

TEST(Field, BudgetEnforced) { EXPECT_THROW(Field(2, 23), std::invalid_argument); }

TEST(Field, Gf27ModulusIsSmallestPrimitive) {
    const Field& f = field_create(3, 3);
    // Oracle: scan monic cubics in (c2, c1, c0) lex order for the first one
    // where x has multiplicative order 26.
    Poly found;
    for (unsigned code = 0; code < 27 && found.empty(); ++code) {
        // lex order over (c2, c1, c0): most significant digit first
        unsigned c2 = code / 9, c1 = (code / 3) % 3, c0 = code % 3;
        Poly mod{c0, c1, c2, 1};
        if (oracle_order_of_x(mod, 3, 27) == 26) found = mod;
    }
    ASSERT_FALSE(found.empty());
    std::vector<Elem> expect(found.begin(), found.end());
    EXPECT_EQ(f.modulus(), expect);
    // Frozen value of the oracle's result: x^3 + 2x + 1.
    EXPECT_EQ(f.modulus(), (std::vector<Elem>{1, 2, 0, 1}));
}

TEST(Field, ExpLogRoundTrip) {
    const Field& f = field_create(5, 3);
    for (Elem x = 1; x < f.q(); ++x) EXPECT_EQ(f.exp(f.log(x)), x);
    EXPECT_EQ(f.exp(f.q() - 1), f.exp(0));  // period q-1
}

TEST(Trace, TraceOfOneIsExtensionDegreeModP) {
    const Field& big = field_create(3, 2);
    const SubfieldMap& m = get_subfield_map(big, field_create(3, 1));
    EXPECT_EQ(m.trace(1), 2u);  // tr_{9/3}(1) = 2
}

TEST(Trace, KernelSizeOfTrace27To3) {
    const Field& big = field_create(3, 3);
    const SubfieldMap& m = get_subfield_map(big, field_create(3, 1));
    std::size_t kernel = 0;
    for (Elem x = 0; x < big.q(); ++x)
        if (m.trace(x) == 0) ++kernel;
    EXPECT_EQ(kernel, 9u);  // q^(m-1)
}

TEST(Trace, Trace81Over9MatchesDirectPowerSum) {
    const Field& big = field_create(3, 4);
    const Field& sub = field_create(3, 2);
    const SubfieldMap& m = get_subfield_map(big, sub);
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        Elem x = Elem(rng() % big.q());
        Elem direct = big.add(x, big.pow(x, 9));  // x + x^9
        EXPECT_EQ(m.embed(m.trace(x)), direct);
    }
}

TEST(Trace, AdditiveAndSubfieldLinear) {
    const Field& big = field_create(3, 4);
    const Field& sub = field_create(3, 2);
    const SubfieldMap& m = get_subfield_map(big, sub);
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        Elem x = Elem(rng() % big.q()), y = Elem(rng() % big.q());
        Elem c_sub = Elem(rng() % sub.q());
        EXPECT_EQ(m.trace(big.add(x, y)), sub.add(m.trace(x), m.trace(y)));
        // GF(9)-linearity: tr(c x) = c tr(x) for c in the subfield
        Elem cx = big.mul(m.embed(c_sub), x);
        EXPECT_EQ(m.trace(cx), sub.mul(c_sub, m.trace(x)));
    }
}

TEST(Trace, NormMultiplicative) {
    const Field& big = field_create(5, 2);
    const SubfieldMap& m = get_subfield_map(big, field_create(5, 1));
    std::mt19937 rng(13);
    for (int i = 0; i < 50; ++i) {
        Elem x = Elem(1 + rng() % (big.q() - 1)), y = Elem(1 + rng() % (big.q() - 1));
        EXPECT_EQ(m.norm(big.mul(x, y)), m.sub().mul(m.norm(x), m.norm(y)));
    }
}

TEST(QuadraticCharacter, Conventions) {
    const Field& f9 = field_create(3, 2);
    EXPECT_EQ(quadratic_character(f9, 0), 0);
    EXPECT_EQ(quadratic_character(f9, f9.generator()), -1);
    EXPECT_EQ(quadratic_character(f9, f9.neg(1)), 1);  // q = 9 = 1 mod 4
    EXPECT_THROW(quadratic_character(field_create(2, 2), 1), std::domain_error);
}

TEST(QuadraticCharacter, MultiplicativeOnSquares) {
    const Field& f = field_create(7, 1);
    int squares = 0;
    for (Elem x = 1; x < f.q(); ++x)
        if (quadratic_character(f, x) == 1) ++squares;
    EXPECT_EQ(squares, 3);  // (q-1)/2
}
