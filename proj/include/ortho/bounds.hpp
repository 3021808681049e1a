// Griesmer accounting and the sphere-packing (Hamming) classification.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ortho/bigint.hpp"

namespace ortho {

enum class SpherePackingClass { kOptimal, kAlmostOptimal, kNeither };

inline const char* to_string(SpherePackingClass c) {
    switch (c) {
        case SpherePackingClass::kOptimal: return "optimal";
        case SpherePackingClass::kAlmostOptimal: return "almost-optimal";
        default: return "neither";
    }
}

struct BoundsReport {
    BigInt griesmer_sum;           // sum of ceil(d / q^i), i < k
    bool griesmer_met = false;     // equality with n
    SpherePackingClass sphere_packing_class = SpherePackingClass::kNeither;
    std::uint64_t divisor = 0;     // filled in by the caller when known
};

inline BigInt griesmer_sum(std::uint64_t k, std::uint64_t d, std::uint64_t q) {
    BigInt sum = 0, qi = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        sum += (BigInt(d) + qi - 1) / qi;
        if (qi >= d) {
            sum += k - i - 1;  // remaining terms are all 1
            break;
        }
        qi *= q;
    }
    return sum;
}

// Hamming sphere volume exceeds the available space for an [n, k, d] code.
inline bool hamming_violated(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q) {
    std::uint64_t t = (d - 1) / 2;
    BigInt vol = 0;
    for (std::uint64_t i = 0; i <= t && i <= n; ++i) vol += binomial(std::int64_t(n), std::int64_t(i)) * big_pow(q - 1, i);
    return vol > big_pow(q, n - k);
}

// Classification per the Hamming-bound rule: optimal when an [n, k, d+1]
// code is ruled out, almost-optimal when [n, k, d+2] is.  The rule can only
// certify nonexistence; "neither" means inconclusive, not suboptimal.
inline BoundsReport bounds_audit(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q) {
    if (k < 1 || k > n || d < 1 || d > n) throw std::invalid_argument("bounds_audit: need 1 <= k <= n, 1 <= d <= n");
    BoundsReport r;
    r.griesmer_sum = griesmer_sum(k, d, q);
    r.griesmer_met = (r.griesmer_sum == n);
    auto ruled_out = [&](std::uint64_t dd) { return dd > n || hamming_violated(n, k, dd, q); };
    if (ruled_out(d + 1))
        r.sphere_packing_class = SpherePackingClass::kOptimal;
    else if (ruled_out(d + 2))
        r.sphere_packing_class = SpherePackingClass::kAlmostOptimal;
    else
        r.sphere_packing_class = SpherePackingClass::kNeither;
    return r;
}

}  // namespace ortho
