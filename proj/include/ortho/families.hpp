// Constructors for the code families: four augmented-extended cyclic
// families, two BCH-derived families, two locality-2 defining-set families,
// generalized Reed-Muller, GRS, and the trace-zero worked example.

#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ortho/code.hpp"
#include "ortho/cyclotomic.hpp"
#include "ortho/gf.hpp"
#include "ortho/trace_code.hpp"

namespace ortho {

enum class FamilyId { kC1, kC2, kC3, kC4, kBch2, kBch3, kLrc1, kLrc2, kGrm, kGrs, kTraceZero };

inline const char* to_string(FamilyId id) {
    switch (id) {
        case FamilyId::kC1: return "c1";
        case FamilyId::kC2: return "c2";
        case FamilyId::kC3: return "c3";
        case FamilyId::kC4: return "c4";
        case FamilyId::kBch2: return "bch2";
        case FamilyId::kBch3: return "bch3";
        case FamilyId::kLrc1: return "lrc1";
        case FamilyId::kLrc2: return "lrc2";
        case FamilyId::kGrm: return "grm";
        case FamilyId::kGrs: return "grs";
        default: return "trace0";
    }
}

inline std::optional<FamilyId> family_from_string(const std::string& s) {
    for (FamilyId id : {FamilyId::kC1, FamilyId::kC2, FamilyId::kC3, FamilyId::kC4, FamilyId::kBch2,
                        FamilyId::kBch3, FamilyId::kLrc1, FamilyId::kLrc2, FamilyId::kGrm, FamilyId::kGrs,
                        FamilyId::kTraceZero})
        if (s == to_string(id)) return id;
    return std::nullopt;
}

struct FamilyParams {
    FamilyId id = FamilyId::kGrs;
    std::uint64_t p = 0;   // characteristic (c1, c2, c4, lrc2)
    std::uint64_t q = 0;   // alphabet size as a prime power (c3, bch2, bch3, lrc1, grm, grs, trace0)
    std::uint64_t e = 0;   // exponent of p in the alphabet (c1/c2 derive it; c4 takes it)
    std::uint64_t m = 0;
    std::uint64_t k = 0;   // c1/c2 exponent parameter; grs dimension
    std::uint64_t s = 0;   // c4 half-degree
    std::uint64_t m1 = 0, m2 = 0;  // lrc1
    std::uint64_t rho = 0;         // grm order
    std::optional<FunctionTable> fn;  // lrc2 function (defaults to tr(x^2))
    std::string fn_path;              // where fn came from, for reports

    std::string describe() const {
        std::string s_ = std::string("family=") + to_string(id);
        auto put = [&](const char* k_, std::uint64_t v) {
            if (v) s_ += std::string(" ") + k_ + "=" + std::to_string(v);
        };
        put("p", p);
        put("q", q);
        put("e", e);
        put("m", m);
        put("k", k);
        put("s", s);
        put("m1", m1);
        put("m2", m2);
        put("rho", rho);
        if (!fn_path.empty()) s_ += " fn=" + fn_path;
        return s_;
    }
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// ((p^k + 1) / 2) mod (order), computed without overflowing on large k.
inline std::uint64_t half_pk_plus_one_mod(std::uint64_t p, std::uint64_t k, std::uint64_t order) {
    // work mod 2*order so the division by 2 stays exact
    unsigned __int128 mod = std::uint64_t(2) * order;
    unsigned __int128 r = 1, b = p % mod;
    std::uint64_t e = k;
    while (e) {
        if (e & 1) r = r * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    std::uint64_t pk = std::uint64_t(r);
    std::uint64_t val = (pk + 1) % (2 * order);
    return (val / 2) % order;  // p odd makes pk + 1 even
}

inline std::vector<Elem> trace_kernel_domain(const Field& big, const SubfieldMap& to_mid) {
    std::vector<Elem> d;
    for (std::uint64_t x = 0; x < big.q(); ++x)
        if (to_mid.trace(Elem(x)) == 0) d.push_back(Elem(x));
    return d;
}

}  // namespace detail

// Monomials with per-variable degree < q and total degree <= rho, in graded
// lexicographic order; the generalized Reed-Muller evaluation basis.
inline std::vector<std::vector<std::uint32_t>> grm_monomials(std::uint64_t q, std::uint64_t m, std::uint64_t rho) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur(m, 0);
    for (std::uint64_t total = 0; total <= rho; ++total) {
        // enumerate fixed-total-degree exponent vectors lexicographically
        std::vector<std::vector<std::uint32_t>> level;
        std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t rem) {
            if (i == m) {
                if (rem == 0) level.push_back(cur);
                return;
            }
            std::uint64_t cap = std::min<std::uint64_t>(q - 1, rem);
            for (std::uint64_t d = 0; d <= cap; ++d) {
                cur[i] = std::uint32_t(d);
                rec(i + 1, rem - d);
            }
            cur[i] = 0;
        };
        rec(0, total);
        for (auto& v : level) out.push_back(std::move(v));
    }
    return out;
}

inline BigInt grm_dimension_formula(std::uint64_t q, std::uint64_t m, std::uint64_t rho) {
    BigInt dim = 0;
    for (std::uint64_t j = 0; j <= m; ++j) {
        BigInt term = binomial(std::int64_t(m), std::int64_t(j)) *
                      binomial(std::int64_t(m + rho - j * q), std::int64_t(rho - j * q));
        if (std::int64_t(rho) - std::int64_t(j * q) < 0) term = 0;
        dim += (j % 2 ? -term : term);
    }
    return dim;
}

inline LinearCode build_family(const FamilyParams& P) {
    using detail::require;
    switch (P.id) {
        case FamilyId::kC1:
        case FamilyId::kC2: {
            require(P.p >= 3 && is_prime_u64(P.p), "c1/c2: p must be an odd prime");
            require(P.m >= 1 && P.k >= 1, "c1/c2: need positive m and k");
            std::uint64_t e = std::gcd(P.m, P.k);
            std::uint64_t s = P.m / e;
            require(s >= 3, "c1/c2: s = m/gcd(m,k) must be at least 3");
            require(s % 2 == 1, "c1/c2: s must be odd (hypothesis of the weight lemma)");
            if (P.id == FamilyId::kC1)
                require((P.k / e) % 2 == 1, "c1: k/e must be odd");
            else
                require((P.k / e) % 2 == 0, "c2: k/e must be even");
            const Field& big = field_create(std::uint32_t(P.p), std::uint32_t(P.m));
            const Field& prime = field_create(std::uint32_t(P.p), 1);
            Elem alpha = big.generator();
            Elem g0 = (P.id == FamilyId::kC1) ? big.neg(alpha) : alpha;
            Elem g1 = big.exp(detail::half_pk_plus_one_mod(P.p, P.k, big.q() - 1));
            TraceCodeConfig cfg = power_sequence_config(big, prime, {g0, g1}, big.q() - 1);
            cfg.all_one_row = true;
            cfg.trailing_constant = true;
            return trace_code_build(cfg);
        }
        case FamilyId::kC3: {
            auto [p, e] = parse_prime_power(P.q);
            require(p >= 3, "c3: q must be odd");
            require(P.m >= 3, "c3: m must be at least 3");
            const Field& big = field_create(p, e * std::uint32_t(P.m));
            const Field& alph = field_create(p, e);
            Elem theta = big.generator();
            std::uint64_t order = big.q() - 1;
            Elem g2 = big.exp(((order / 2) + 1) % order);
            TraceCodeConfig cfg = power_sequence_config(big, alph, {theta, g2}, order);
            cfg.all_one_row = true;
            cfg.trailing_constant = true;
            return trace_code_build(cfg);
        }
        case FamilyId::kC4: {
            require(P.p >= 3 && is_prime_u64(P.p), "c4: p must be an odd prime");
            require(P.e >= 1, "c4: need e >= 1");
            require(P.s >= 2, "c4: need s >= 2");
            std::uint64_t m = 2 * P.s;
            const Field& big = field_create(std::uint32_t(P.p), std::uint32_t(P.e * m));
            const Field& alph = field_create(std::uint32_t(P.p), std::uint32_t(P.e));
            std::uint64_t N = alph.q() + 1;
            Elem theta = big.pow(big.generator(), N);
            std::uint64_t len = (big.q() - 1) / N;
            TraceCodeConfig cfg = power_sequence_config(big, alph, {theta}, len);
            cfg.all_one_row = true;
            cfg.trailing_constant = true;
            return trace_code_build(cfg);
        }
        case FamilyId::kBch2:
        case FamilyId::kBch3: {
            require(is_prime_u64(P.q) && P.q >= 3, "bch: q must be an odd prime");
            std::uint64_t min_m = (P.id == FamilyId::kBch2) ? 3 : 4;
            require(P.m >= min_m || (P.id == FamilyId::kBch3 && P.m >= 5 && P.m % 2 == 1),
                    "bch: m out of range for the family");
            if (P.id == FamilyId::kBch3 && P.m % 2 == 1) require(P.m >= 5, "bch3: odd m must be at least 5");
            const Field& big = field_create(std::uint32_t(P.q), std::uint32_t(P.m));
            const Field& alph = field_create(std::uint32_t(P.q), 1);
            std::uint64_t h = (P.m - 1) / 2 + 1;
            std::uint64_t order = big.q() - 1;
            auto qpow_mod = [&](std::uint64_t ex) {
                unsigned __int128 r = 1, b = P.q % order;
                while (ex) {
                    if (ex & 1) r = r * b % order;
                    b = b * b % order;
                    ex >>= 1;
                }
                return std::uint64_t(r);
            };
            std::vector<Elem> domain(order);
            for (std::uint64_t t = 0; t < order; ++t) domain[t] = big.exp(t);
            std::vector<std::uint64_t> exps;
            if (P.id == FamilyId::kBch2)
                exps = {(1 + qpow_mod(h)) % order, 1};
            else
                exps = {1, (1 + qpow_mod(h)) % order, (1 + qpow_mod(h + 1)) % order};
            TraceCodeConfig cfg = monomial_domain_config(big, alph, domain, exps);
            LinearCode tilde = trace_code_build(cfg);
            return tilde.augment().extend();
        }
        case FamilyId::kLrc1: {
            auto [p, e] = parse_prime_power(P.q);
            require(p >= 3, "lrc1: q must be odd");
            require(P.m1 >= 1 && P.m2 >= 1, "lrc1: need m1, m2 >= 1");
            require(P.m1 % P.m2 == 0 && P.m % P.m1 == 0, "lrc1: need m2 | m1 | m");
            bool odd_odd = ((P.m / P.m2) % 2 == 1) && ((P.m1 / P.m2) % 2 == 1);
            require(P.m >= 3 * P.m1, "lrc1: need m >= 3 m1");
            if (odd_odd) require(P.m > 3 * P.m1, "lrc1: odd/odd case needs m > 3 m1");
            const Field& big = field_create(p, e * std::uint32_t(P.m));
            const Field& mid = field_create(p, e * std::uint32_t(P.m1));
            const Field& alph = field_create(p, e * std::uint32_t(P.m2));
            std::vector<Elem> domain = detail::trace_kernel_domain(big, get_subfield_map(big, mid));
            TraceCodeConfig cfg = monomial_domain_config(big, alph, domain, {2});
            cfg.all_one_row = true;
            return trace_code_build(cfg);
        }
        case FamilyId::kLrc2: {
            require(P.p >= 3 && is_prime_u64(P.p), "lrc2: p must be an odd prime");
            require(P.m >= 4, "lrc2: need m >= 4");
            const Field& big = field_create(std::uint32_t(P.p), std::uint32_t(P.m));
            const Field& alph = field_create(std::uint32_t(P.p), 1);
            FunctionTable f = P.fn ? *P.fn : quadratic_trace_table(big);
            BentRejection why;
            auto prof = rf_membership(f, &why);
            require(prof.has_value(), "lrc2: function failed the bent screen: " + why.clause);
            std::vector<Elem> domain;
            for (std::uint64_t x = 0; x < big.q(); ++x)
                if (f.values[x] == 0) domain.push_back(Elem(x));
            TraceCodeConfig cfg = monomial_domain_config(big, alph, domain, {1});
            cfg.all_one_row = true;
            return trace_code_build(cfg);
        }
        case FamilyId::kGrm: {
            auto [p, e] = parse_prime_power(P.q);
            require(P.m >= 1, "grm: need m >= 1");
            require(P.rho >= 1 && P.rho <= P.m * (P.q - 1), "grm: need 1 <= rho <= m(q-1)");
            const Field& F = field_create(p, e);
            auto monos = grm_monomials(P.q, P.m, P.rho);
            std::uint64_t n = 1;
            for (std::uint64_t i = 0; i < P.m; ++i) n *= P.q;
            std::vector<Row> rows;
            rows.reserve(monos.size());
            for (const auto& mono : monos) {
                Row r(n);
                for (std::uint64_t z = 0; z < n; ++z) {
                    Elem val = 1;
                    std::uint64_t rest = z;
                    for (std::uint64_t i = 0; i < P.m; ++i) {
                        Elem zi = Elem(rest % P.q);
                        rest /= P.q;
                        if (mono[i]) val = F.mul(val, F.pow(zi, mono[i]));
                    }
                    r[z] = val;
                }
                rows.push_back(std::move(r));
            }
            return LinearCode(F, std::move(rows));
        }
        case FamilyId::kGrs: {
            auto [p, e] = parse_prime_power(P.q);
            require(P.k >= 1 && P.k <= P.q, "grs: need 1 <= k <= q");
            const Field& F = field_create(p, e);
            std::vector<Elem> pts;
            pts.push_back(0);
            for (std::uint64_t i = 0; i + 1 < F.q(); ++i) pts.push_back(F.exp(i));
            std::vector<Row> rows(P.k, Row(pts.size()));
            for (std::size_t r = 0; r < P.k; ++r)
                for (std::size_t j = 0; j < pts.size(); ++j) rows[r][j] = F.pow(pts[j], r);
            return LinearCode(F, std::move(rows));
        }
        case FamilyId::kTraceZero: {
            auto [p, e] = parse_prime_power(P.q);
            require(P.m > 2, "trace0: need m > 2");
            const Field& big = field_create(p, e * std::uint32_t(P.m));
            const Field& alph = field_create(p, e);
            std::vector<Elem> domain = detail::trace_kernel_domain(big, get_subfield_map(big, alph));
            TraceCodeConfig cfg = monomial_domain_config(big, alph, domain, {1});
            cfg.all_one_row = true;
            return trace_code_build(cfg);
        }
    }
    throw std::logic_error("unreachable family id");
}

}  // namespace ortho
