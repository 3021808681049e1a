// Exact weight distributions by exhaustive enumeration of the message
// space, partitioned over worker threads.  Result is identical for any
// worker count: each worker owns a contiguous message range and a private
// histogram, merged by exact addition.

#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ortho/bigint.hpp"
#include "ortho/code.hpp"

namespace ortho {

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(std::string what, std::uint64_t required, std::uint64_t budget)
        : std::runtime_error(what + ": requires " + std::to_string(required) + " > budget " + std::to_string(budget)),
          required(required),
          budget(budget) {}
    std::uint64_t required;
    std::uint64_t budget;
};

constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 26;

struct WeightDistribution {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t q = 0;
    std::map<std::size_t, BigInt> counts;

    BigInt total() const {
        BigInt t = 0;
        for (const auto& [w, c] : counts) t += c;
        return t;
    }

    // Smallest nonzero weight; 0 for the zero code.
    std::size_t min_distance() const {
        for (const auto& [w, c] : counts)
            if (w > 0 && c > 0) return w;
        return 0;
    }

    // gcd of all nonzero weights; 0 for the zero code (no nonzero weight
    // exists), 1 meaning "not divisible".
    std::uint64_t divisor() const {
        std::uint64_t g = 0;
        for (const auto& [w, c] : counts)
            if (w > 0 && c > 0) g = std::gcd(g, std::uint64_t(w));
        return g;
    }

    bool consistent() const {
        if (counts.count(0) == 0 || counts.at(0) != 1) return false;
        for (const auto& [w, c] : counts)
            if (w > n || c < 0) return false;
        return total() == big_pow(q, k);
    }

    bool operator==(const WeightDistribution& o) const {
        auto nz = [](const std::map<std::size_t, BigInt>& m) {
            std::map<std::size_t, BigInt> r;
            for (const auto& [w, c] : m)
                if (c != 0) r.emplace(w, c);
            return r;
        };
        return n == o.n && k == o.k && q == o.q && nz(counts) == nz(o.counts);
    }
};

namespace detail {

inline void enumerate_range(const Field& F, const std::vector<std::vector<Row>>& scaled, std::size_t n,
                            std::uint64_t start, std::uint64_t end, std::vector<std::uint64_t>& hist) {
    const std::size_t k = scaled.size();
    const std::uint64_t q = F.q();
    const std::vector<Elem>* tab = F.add_table();

    std::vector<Elem> digits(k, 0);
    {
        std::uint64_t idx = start;
        for (std::size_t j = k; j-- > 0;) {
            digits[j] = Elem(idx % q);
            idx /= q;
        }
    }
    const Row zeros(n, 0);
    // partial[j] = sum of scaled rows 0..j; the last level is fused into the
    // weight count and never materialized.
    std::vector<Row> partial(k >= 1 ? k - 1 : 0, Row(n, 0));
    auto recompute_from = [&](std::size_t lvl) {
        for (std::size_t j = lvl; j + 1 < k; ++j) {
            const Row& prev = (j == 0) ? zeros : partial[j - 1];
            const Row& add = scaled[j][digits[j]];
            Row& out = partial[j];
            if (tab) {
                const Elem* t = tab->data();
                for (std::size_t i = 0; i < n; ++i) out[i] = t[std::uint64_t(prev[i]) * q + add[i]];
            } else {
                for (std::size_t i = 0; i < n; ++i) out[i] = F.add(prev[i], add[i]);
            }
        }
    };
    recompute_from(0);

    std::uint64_t idx = start;
    while (idx < end) {
        const Row& base = (k >= 2) ? partial[k - 2] : zeros;
        const Row& last = scaled[k - 1][digits[k - 1]];
        std::size_t w = 0;
        if (tab) {
            const Elem* t = tab->data();
            const Elem* b = base.data();
            const Elem* l = last.data();
            for (std::size_t i = 0; i < n; ++i) w += (t[std::uint64_t(b[i]) * q + l[i]] != 0);
        } else {
            for (std::size_t i = 0; i < n; ++i) w += (F.add(base[i], last[i]) != 0);
        }
        ++hist[w];
        ++idx;
        std::size_t j = k;
        while (j-- > 0) {
            if (digits[j] + 1 < q) {
                ++digits[j];
                break;
            }
            digits[j] = 0;
            if (j == 0) return;  // wrapped past the end of the space
        }
        if (j + 1 < k) recompute_from(j);
    }
}

}  // namespace detail

// Exact counts of all q^k codewords.  Deterministic for any worker count.
inline WeightDistribution weight_distribution(const LinearCode& C, std::uint64_t budget = kDefaultBudget,
                                              unsigned workers = 1) {
    const Field& F = C.field();
    const std::size_t n = C.n(), k = C.k();
    const std::uint64_t q = F.q();

    BigInt required = big_pow(q, k);
    if (required > budget)
        throw BudgetExceeded("weight enumeration",
                             required > std::uint64_t(-1) ? std::uint64_t(-1) : to_u64(required), budget);
    std::uint64_t total = to_u64(required);

    WeightDistribution wd;
    wd.n = n;
    wd.k = k;
    wd.q = q;
    if (k == 0) {
        wd.counts[0] = 1;
        return wd;
    }

    std::vector<std::vector<Row>> scaled(k, std::vector<Row>(q, Row(n)));
    for (std::size_t r = 0; r < k; ++r)
        for (std::uint64_t v = 0; v < q; ++v)
            for (std::size_t i = 0; i < n; ++i) scaled[r][v][i] = F.mul(Elem(v), C.basis()[r][i]);
    F.add_table();  // build once before the threads share it

    if (workers == 0) workers = 1;
    if (std::uint64_t(workers) > total) workers = unsigned(total);
    std::vector<std::vector<std::uint64_t>> hists(workers, std::vector<std::uint64_t>(n + 1, 0));
    if (workers == 1) {
        detail::enumerate_range(F, scaled, n, 0, total, hists[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
            std::uint64_t hi = lo + total / workers + (w < total % workers ? 1 : 0);
            pool.emplace_back([&, lo, hi, w] { detail::enumerate_range(F, scaled, n, lo, hi, hists[w]); });
        }
        for (auto& t : pool) t.join();
    }

    std::vector<std::uint64_t> merged(n + 1, 0);
    for (const auto& h : hists)
        for (std::size_t w = 0; w <= n; ++w) merged[w] += h[w];
    for (std::size_t w = 0; w <= n; ++w)
        if (merged[w]) wd.counts[w] = merged[w];
    return wd;
}

}  // namespace ortho
