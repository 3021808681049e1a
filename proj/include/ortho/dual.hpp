// Dual-side machinery: exact MacWilliams transform, Pless power moments,
// brute-force dual enumeration (for cross-checks), and the column-subset
// search for low-weight dual codewords.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "ortho/bigint.hpp"
#include "ortho/code.hpp"
#include "ortho/weights.hpp"

namespace ortho {

struct DualSummary {
    WeightDistribution distribution;  // exact dual weight distribution
    std::size_t d_perp = 0;
    std::array<BigInt, 7> a_perp{};   // A^perp_0..A^perp_6
};

// A^perp(z) = q^-k (1+(q-1)z)^n A((1-z)/(1+(q-1)z)), expanded with exact
// big-integer binomial convolutions.  Division by q^k is checked exact; a
// remainder means the input distribution was inconsistent.
inline DualSummary macwilliams(const WeightDistribution& wd) {
    const std::size_t n = wd.n;
    const BigInt qk = big_pow(wd.q, wd.k);
    if (wd.total() != qk || wd.counts.count(0) == 0 || wd.counts.at(0) != 1)
        throw std::domain_error("macwilliams: inconsistent input distribution");

    const BigInt qm1 = wd.q - 1;
    std::vector<BigInt> qm1pow(n + 1);
    qm1pow[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) qm1pow[i] = qm1pow[i - 1] * qm1;

    // Pascal triangle up to n.
    std::vector<std::vector<BigInt>> bin(n + 1, std::vector<BigInt>(n + 1));
    for (std::size_t i = 0; i <= n; ++i) {
        bin[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) bin[i][j] = bin[i - 1][j - 1] + (j <= i - 1 ? bin[i - 1][j] : 0);
    }

    DualSummary out;
    out.distribution.n = n;
    out.distribution.k = n - wd.k;
    out.distribution.q = wd.q;
    for (std::size_t l = 0; l <= n; ++l) {
        BigInt acc = 0;
        for (const auto& [i, Ai] : wd.counts) {
            if (Ai == 0) continue;
            // coefficient of z^l in (1-z)^i (1+(q-1)z)^(n-i)
            BigInt kraw = 0;
            for (std::size_t h = 0; h <= l && h <= i; ++h) {
                if (l - h > n - i) continue;
                BigInt term = bin[i][h] * bin[n - i][l - h] * qm1pow[l - h];
                if (h % 2)
                    kraw -= term;
                else
                    kraw += term;
            }
            acc += Ai * kraw;
        }
        BigInt Al = div_exact(acc, qk, "macwilliams");
        if (Al != 0) out.distribution.counts[l] = Al;
        if (l <= 6) out.a_perp[l] = Al;
    }
    out.d_perp = out.distribution.min_distance();
    return out;
}

struct PlessResult {
    bool pass = false;
    int first_violated = 0;  // 1..4, 0 when pass
};

// Checks the first four power moments of wd against supplied dual
// coefficients A1..A3, exactly (cross-multiplied when k < 3).
inline PlessResult pless_verify(const WeightDistribution& wd, const BigInt& a1, const BigInt& a2,
                                const BigInt& a3) {
    const BigInt q = wd.q;
    const BigInt n = wd.n;
    const std::int64_t k = std::int64_t(wd.k);

    BigInt m0 = 0, m1 = 0, m2 = 0, m3 = 0;
    for (const auto& [w, c] : wd.counts) {
        BigInt i = w;
        m0 += c;
        m1 += i * c;
        m2 += i * i * c;
        m3 += i * i * i * c;
    }

    auto scaled_eq = [&](const BigInt& lhs, const BigInt& rhs, std::int64_t shift) {
        // lhs == q^(k-shift) * rhs, with negative exponents cross-multiplied
        if (k >= shift) return lhs == big_pow(q, std::uint64_t(k - shift)) * rhs;
        return lhs * big_pow(q, std::uint64_t(shift - k)) == rhs;
    };

    PlessResult r;
    if (m0 != big_pow(q, std::uint64_t(k))) {
        r.first_violated = 1;
        return r;
    }
    if (!scaled_eq(m1, q * n - n - a1, 1)) {
        r.first_violated = 2;
        return r;
    }
    BigInt rhs2 = (q - 1) * n * (q * n - n + 1) - (2 * q * n - q - 2 * n + 2) * a1 + 2 * a2;
    if (!scaled_eq(m2, rhs2, 2)) {
        r.first_violated = 3;
        return r;
    }
    BigInt rhs3 = (q - 1) * n * (q * q * n * n - 2 * q * n * n + 3 * q * n - q + n * n - 3 * n + 2) -
                  (3 * q * q * n * n - 3 * q * q * n - 6 * q * n * n + 12 * q * n + q * q - 6 * q + 3 * n * n -
                   9 * n + 6) *
                      a1 +
                  6 * (q * n - q - n + 2) * a2 - 6 * a3;
    if (!scaled_eq(m3, rhs3, 3)) {
        r.first_violated = 4;
        return r;
    }
    r.pass = true;
    return r;
}

// Dual distribution by direct enumeration of the null space.
inline WeightDistribution dual_distribution_brute(const LinearCode& C, std::uint64_t budget = kDefaultBudget,
                                                  unsigned workers = 1) {
    std::vector<Row> db = dual_basis(C);
    if (db.empty()) db.push_back(Row(C.n(), 0));
    LinearCode dual(C.field(), std::move(db));
    return weight_distribution(dual, budget, workers);
}

// All dual codewords of weight <= w_max, found as column subsets of G that
// carry a full-support dependency.  Grouped by weight; the counts must match
// the MacWilliams coefficients.
inline std::map<std::size_t, std::vector<Row>> low_weight_dual_words(const LinearCode& C, std::size_t w_max,
                                                                     std::uint64_t budget = kDefaultBudget) {
    const Field& F = C.field();
    const std::size_t n = C.n(), k = C.k();
    const std::uint64_t q = F.q();

    BigInt work = 0;
    for (std::size_t w = 1; w <= w_max; ++w) work += binomial(std::int64_t(n), std::int64_t(w)) * big_pow(q - 1, w - 1);
    if (work > budget)
        throw BudgetExceeded("dual word search", work > std::uint64_t(-1) ? std::uint64_t(-1) : to_u64(work), budget);

    std::map<std::size_t, std::vector<Row>> out;
    std::vector<std::size_t> idx;
    // columns once
    std::vector<Row> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = C.column(j);

    for (std::size_t w = 1; w <= w_max && w <= n; ++w) {
        idx.assign(w, 0);
        for (std::size_t i = 0; i < w; ++i) idx[i] = i;
        while (true) {
            // kernel of the k x w matrix whose columns are cols[idx]
            std::vector<Row> m(k, Row(w));
            for (std::size_t j = 0; j < w; ++j)
                for (std::size_t i = 0; i < k; ++i) m[i][j] = cols[idx[j]][i];
            std::vector<std::size_t> piv;
            rref(F, m, &piv);
            std::size_t rank = m.size();
            if (rank < w) {
                // kernel basis over the free columns
                std::vector<bool> is_piv(w, false);
                for (std::size_t p : piv) is_piv[p] = true;
                std::vector<Row> kb;
                for (std::size_t c = 0; c < w; ++c) {
                    if (is_piv[c]) continue;
                    Row v(w, 0);
                    v[c] = 1;
                    for (std::size_t i = 0; i < rank; ++i) v[piv[i]] = F.neg(m[i][c]);
                    kb.push_back(std::move(v));
                }
                // enumerate nonzero kernel vectors, keep the full-support ones
                std::uint64_t cnt = 1;
                for (std::size_t i = 0; i < kb.size(); ++i) cnt *= q;
                for (std::uint64_t msg = 1; msg < cnt; ++msg) {
                    Row v(w, 0);
                    std::uint64_t t = msg;
                    for (std::size_t r = 0; r < kb.size(); ++r) {
                        Elem c = Elem(t % q);
                        t /= q;
                        if (!c) continue;
                        for (std::size_t j = 0; j < w; ++j) v[j] = F.add(v[j], F.mul(c, kb[r][j]));
                    }
                    bool full = true;
                    for (Elem x : v)
                        if (!x) {
                            full = false;
                            break;
                        }
                    if (!full) continue;
                    Row word(n, 0);
                    for (std::size_t j = 0; j < w; ++j) word[idx[j]] = v[j];
                    out[w].push_back(std::move(word));
                }
            }
            // next combination
            std::size_t i = w;
            while (i-- > 0) {
                if (idx[i] + 1 <= n - w + i) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) goto next_w;
            }
        }
    next_w:;
    }
    return out;
}

}  // namespace ortho
