// Generic trace-code engine: every cyclic/defining-set family here is a
// configuration of this one builder, not bespoke matrix code.
//
// Generator rows are (tr(mu * point[t][slot]))_t for each subfield basis
// element mu and each slot, optionally joined by the all-1 row.  When the
// trailing-constant flag is set, trace rows get a trailing 0 and the all-1
// row a trailing 1, realizing the augmented-extended displays literally.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ortho/code.hpp"
#include "ortho/gf.hpp"

namespace ortho {

struct TraceCodeConfig {
    const Field* big = nullptr;       // GF(q^m)
    const Field* alphabet = nullptr;  // GF(q), subfield of big
    // points[t][s]: the big-field argument of slot s at coordinate t
    std::vector<std::vector<Elem>> points;
    bool all_one_row = false;
    bool trailing_constant = false;   // requires all_one_row for a nonzero last column
    std::uint64_t length_budget = std::uint64_t(1) << 20;
};

// Power-sequence domain: slot s at coordinate t carries generators[s]^t.
inline TraceCodeConfig power_sequence_config(const Field& big, const Field& alphabet,
                                             const std::vector<Elem>& generators, std::size_t length) {
    TraceCodeConfig cfg;
    cfg.big = &big;
    cfg.alphabet = &alphabet;
    cfg.points.resize(length, std::vector<Elem>(generators.size()));
    std::vector<Elem> cur(generators.size(), 1);
    for (std::size_t t = 0; t < length; ++t) {
        cfg.points[t] = cur;
        for (std::size_t s = 0; s < generators.size(); ++s) cur[s] = big.mul(cur[s], generators[s]);
    }
    return cfg;
}

// Monomial domain: slot s at coordinate t carries domain[t]^exponents[s].
inline TraceCodeConfig monomial_domain_config(const Field& big, const Field& alphabet,
                                              const std::vector<Elem>& domain,
                                              const std::vector<std::uint64_t>& exponents) {
    TraceCodeConfig cfg;
    cfg.big = &big;
    cfg.alphabet = &alphabet;
    cfg.points.resize(domain.size(), std::vector<Elem>(exponents.size()));
    for (std::size_t t = 0; t < domain.size(); ++t)
        for (std::size_t s = 0; s < exponents.size(); ++s) cfg.points[t][s] = big.pow(domain[t], exponents[s]);
    return cfg;
}

inline LinearCode trace_code_build(const TraceCodeConfig& cfg) {
    if (cfg.points.empty()) throw std::invalid_argument("trace code: empty evaluation domain");
    if (cfg.points.size() > cfg.length_budget) throw std::invalid_argument("trace code: length budget exceeded");
    const Field& big = *cfg.big;
    const Field& alpha = *cfg.alphabet;
    const SubfieldMap& map = get_subfield_map(big, alpha);

    const std::size_t slots = cfg.points[0].size();
    const std::size_t len = cfg.points.size();
    const std::size_t n = len + (cfg.trailing_constant ? 1 : 0);

    std::vector<Row> rows;
    for (std::size_t s = 0; s < slots; ++s) {
        for (Elem mu : map.basis()) {
            Row r(n, 0);
            for (std::size_t t = 0; t < len; ++t) r[t] = map.trace(big.mul(mu, cfg.points[t][s]));
            rows.push_back(std::move(r));
        }
    }
    if (cfg.all_one_row) {
        LinearCode pre(alpha, rows);
        Row ones(n, 1);
        if (!cfg.trailing_constant) {
            if (pre.contains(ones)) throw std::domain_error("trace code: all-1 row already in span");
        }
        rows.push_back(std::move(ones));
    }
    return LinearCode(alpha, std::move(rows));
}

}  // namespace ortho
