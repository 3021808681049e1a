// Exact integer arithmetic helpers used throughout the library.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ortho {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) { return big_pow(BigInt(base), exp); }

// Division that must be exact; a remainder signals a corrupted distribution
// or a non-integral closed form, both of which are hard errors here.
inline BigInt div_exact(const BigInt& a, const BigInt& b, const char* what = "div_exact") {
    if (b == 0) throw std::domain_error(std::string(what) + ": division by zero");
    BigInt q = a / b, r = a % b;
    if (r != 0) throw std::domain_error(std::string(what) + ": inexact division " + a.str() + " / " + b.str());
    return q;
}

// C(n, k) with the usual convention: zero for k < 0 or k > n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// Row n of Pascal's triangle, for repeated MacWilliams-style convolutions.
class BinomialRow {
   public:
    explicit BinomialRow(std::size_t n) : row_(n + 1) {
        row_[0] = 1;
        for (std::size_t k = 1; k <= n; ++k) row_[k] = row_[k - 1] * (n - k + 1) / k;
    }
    const BigInt& operator[](std::size_t k) const { return row_[k]; }
    std::size_t size() const { return row_.size(); }

   private:
    std::vector<BigInt> row_;
};

inline std::uint64_t to_u64(const BigInt& v) { return static_cast<std::uint64_t>(v); }

}  // namespace ortho
