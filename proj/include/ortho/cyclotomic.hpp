// Exact arithmetic in Z[zeta_p] and the character sums evaluated there:
// quadratic Gauss sums, Weil sums of quadratic polynomials, Walsh spectra,
// and the membership screen for weakly regular bent functions.

#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ortho/bigint.hpp"
#include "ortho/gf.hpp"

namespace ortho {

// Element of Z[zeta_p], stored canonically as p-1 coefficients of
// zeta^0..zeta^(p-2).  Reduction uses 1 + zeta + ... + zeta^(p-1) = 0, so
// equality is plain coefficient equality.
class CycInt {
   public:
    CycInt() : p_(0) {}
    explicit CycInt(std::uint32_t p) : p_(p), c_(p - 1) {}
    CycInt(std::uint32_t p, const BigInt& integer) : p_(p), c_(p - 1) { c_[0] = integer; }

    static CycInt root_power(std::uint32_t p, std::uint64_t k) {
        CycInt z(p);
        z.add_root_power(k, 1);
        return z;
    }

    std::uint32_t p() const { return p_; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    // Accumulate c * zeta^k.
    void add_root_power(std::uint64_t k, const BigInt& coef) {
        k %= p_;
        if (k == p_ - 1) {
            for (auto& x : c_) x -= coef;
        } else {
            c_[k] += coef;
        }
    }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    bool is_integer() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    BigInt integer_value() const {
        if (!is_integer()) throw std::domain_error("cyclotomic: value is not a rational integer");
        return c_.empty() ? BigInt(0) : c_[0];
    }

    CycInt& operator+=(const CycInt& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    CycInt& operator-=(const CycInt& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }

    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        a.check(b);
        std::uint32_t p = a.p_;
        std::vector<BigInt> grp(p);  // group ring Z[Z_p]
        for (std::size_t i = 0; i + 1 < p; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j + 1 < p; ++j) {
                if (b.c_[j] == 0) continue;
                grp[(i + j) % p] += a.c_[i] * b.c_[j];
            }
        }
        return from_group_ring(p, grp);
    }
    CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

    CycInt operator-() const {
        CycInt r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend CycInt operator*(const BigInt& s, CycInt a) {
        for (auto& x : a.c_) x *= s;
        return a;
    }

    // Complex conjugation zeta -> zeta^(p-1).
    CycInt conj() const {
        std::vector<BigInt> grp(p_);
        for (std::size_t i = 0; i + 1 < p_; ++i) grp[(p_ - i) % p_] += c_[i];
        return from_group_ring(p_, grp);
    }

    BigInt norm_squared() const { return (*this * conj()).integer_value(); }

    CycInt pow(std::uint64_t e) const {
        CycInt r(p_, 1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const CycInt& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += c_[i].str() + "*z^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

   private:
    static CycInt from_group_ring(std::uint32_t p, const std::vector<BigInt>& grp) {
        CycInt r(p);
        for (std::size_t i = 0; i + 1 < p; ++i) r.c_[i] = grp[i] - grp[p - 1];
        return r;
    }
    void check(const CycInt& o) const {
        if (p_ != o.p_) throw std::invalid_argument("cyclotomic: mixed p");
    }

    std::uint32_t p_;
    std::vector<BigInt> c_;
};

// Closed form of the quadratic Gauss sum over GF(p^e): a signed sqrt(q) or
// i*sqrt(q), held symbolically.
struct GaussValue {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    int sign = 1;          // +1 or -1
    bool imaginary = false;
    BigInt magnitude_sq;   // p^e

    // Exact image in Z[zeta_p] via the prime-field sum g1 (g1^2 = p*, and the
    // sum over GF(p^e) equals (-1)^(e-1) g1^e).
    CycInt to_cyclotomic() const;
};

// Brute-force quadratic Gauss sum: sum over nonzero x of eta(x) zeta^tr(x).
inline CycInt gauss_sum_brute(const Field& f) {
    if (f.p() == 2) throw std::domain_error("gauss sum needs odd characteristic");
    CycInt acc(f.p());
    for (std::uint64_t i = 0; i + 1 < f.q(); ++i) {
        Elem x = f.exp(i);
        acc.add_root_power(f.trace_to_prime(x), i % 2 == 0 ? 1 : -1);
    }
    return acc;
}

inline GaussValue gauss_sum_quadratic(const Field& f) {
    if (f.p() == 2) throw std::domain_error("gauss sum needs odd characteristic");
    GaussValue g;
    g.p = f.p();
    g.e = f.degree();
    g.magnitude_sq = big_pow(f.p(), f.degree());
    int s = (g.e % 2 == 0) ? -1 : 1;  // (-1)^(e-1)
    if (f.p() % 4 == 1) {
        g.sign = s;
        g.imaginary = false;
    } else {
        // extra factor i^e
        switch (g.e % 4) {
            case 0: g.sign = s; g.imaginary = false; break;
            case 1: g.sign = s; g.imaginary = true; break;
            case 2: g.sign = -s; g.imaginary = false; break;
            default: g.sign = -s; g.imaginary = true; break;
        }
    }
    return g;
}

inline CycInt GaussValue::to_cyclotomic() const {
    // Hasse-Davenport: the sum over GF(p^e) is (-1)^(e-1) g1^e.
    CycInt r = gauss_sum_brute(get_field(p, 1)).pow(e);
    return e % 2 == 0 ? -r : r;
}

// Weil sum of a2 x^2 + a1 x + a0 over the whole field, closed form reduced
// to the quadratic Gauss sum.
inline CycInt weil_sum(const Field& f, Elem a2, Elem a1, Elem a0) {
    if (f.p() == 2) throw std::domain_error("weil sum needs odd characteristic");
    if (!a2) throw std::invalid_argument("weil sum: a2 must be nonzero");
    // shift = a0 - a1^2 (4 a2)^(-1)
    Elem four = 0;
    for (int i = 0; i < 4; ++i) four = f.add(four, 1);
    Elem shift = f.sub(a0, f.mul(f.mul(a1, a1), f.inv(f.mul(four, a2))));
    CycInt phi = CycInt::root_power(f.p(), f.trace_to_prime(shift));
    CycInt g = gauss_sum_quadratic(f).to_cyclotomic();
    CycInt r = phi * g;
    if (quadratic_character(f, a2) < 0) r = -r;
    return r;
}

inline CycInt weil_sum_brute(const Field& f, Elem a2, Elem a1, Elem a0) {
    CycInt acc(f.p());
    for (Elem c = 0; c < f.q(); ++c) {
        Elem v = f.add(f.mul(a2, f.mul(c, c)), f.add(f.mul(a1, c), a0));
        acc.add_root_power(f.trace_to_prime(v), 1);
    }
    return acc;
}

// A function from GF(p^m) to GF(p), tabulated in element-code order.
struct FunctionTable {
    const Field* field = nullptr;
    std::vector<Elem> values;  // length q, entries in [0, p)

    Elem operator()(Elem x) const { return values[x]; }
};

inline FunctionTable quadratic_trace_table(const Field& f) {
    FunctionTable t;
    t.field = &f;
    t.values.resize(f.q());
    for (std::uint64_t x = 0; x < f.q(); ++x) t.values[x] = f.trace_to_prime(f.mul(Elem(x), Elem(x)));
    return t;
}

// Walsh transform W_f(beta) = sum_x zeta^(f(x) - tr(beta x)).
inline CycInt walsh_transform(const FunctionTable& f, Elem beta) {
    const Field& F = *f.field;
    CycInt acc(F.p());
    for (std::uint64_t x = 0; x < F.q(); ++x) {
        Elem e = F.sub(f.values[x], F.trace_to_prime(F.mul(beta, Elem(x))));
        acc.add_root_power(e, 1);
    }
    return acc;
}

struct BentProfile {
    int epsilon = 0;               // sign of the Walsh transform
    std::uint32_t h = 0;           // homogeneity exponent
    FunctionTable dual;            // f*
};

struct BentRejection {
    std::string clause;  // first violated requirement
};

// Screens f for membership in the weakly regular bent class used by the
// locality-2 construction: f(0) = 0, f(ax) = a^h f(x) for some even h with
// gcd(h-1, p-1) = 1, and a Walsh spectrum that is a global sign times
// g1^m times p-th roots of unity (exact, in Z[zeta_p]).
inline std::optional<BentProfile> rf_membership(const FunctionTable& f, BentRejection* why = nullptr) {
    const Field& F = *f.field;
    const std::uint32_t p = F.p();
    auto reject = [&](const std::string& clause) -> std::optional<BentProfile> {
        if (why) why->clause = clause;
        return std::nullopt;
    };
    if (p == 2) return reject("odd characteristic required");
    if (f.values.size() != F.q()) return reject("table length != field size");
    if (f.values[0] != 0) return reject("f(0) != 0");

    // Homogeneity: some even h, gcd(h-1, p-1) = 1.
    std::uint32_t h_found = 0;
    for (std::uint32_t h = 2; h <= p; h += 2) {
        if (std::gcd(h - 1, p - 1) != 1) continue;
        bool ok = true;
        for (Elem a = 2; a < p && ok; ++a) {
            std::uint64_t ah = 1;
            for (std::uint32_t i = 0; i < h; ++i) ah = ah * a % p;
            for (std::uint64_t x = 1; x < F.q() && ok; ++x) {
                Elem ax = F.mul(a, Elem(x));
                if (f.values[ax] != Elem(ah * f.values[x] % p)) ok = false;
            }
        }
        if (ok) {
            h_found = h;
            break;
        }
    }
    if (!h_found) return reject("no homogeneity exponent h");

    // Walsh spectrum: W_f(beta) = eps * g1^m * zeta^(f*(beta)) with one
    // global eps.
    CycInt base = gauss_sum_brute(get_field(p, 1)).pow(F.degree());
    std::vector<CycInt> pos(p), neg(p);
    for (std::uint32_t j = 0; j < p; ++j) {
        pos[j] = base * CycInt::root_power(p, j);
        neg[j] = -pos[j];
    }
    BentProfile prof;
    prof.h = h_found;
    prof.dual.field = &F;
    prof.dual.values.resize(F.q());
    int eps = 0;
    for (std::uint64_t b = 0; b < F.q(); ++b) {
        CycInt w = walsh_transform(f, Elem(b));
        bool matched = false;
        for (std::uint32_t j = 0; j < p && !matched; ++j) {
            if ((eps == 0 || eps == 1) && w == pos[j]) {
                eps = 1;
                prof.dual.values[b] = j;
                matched = true;
            } else if ((eps == 0 || eps == -1) && w == neg[j]) {
                eps = -1;
                prof.dual.values[b] = j;
                matched = true;
            }
        }
        if (!matched) return reject("Walsh value at beta=" + std::to_string(b) + " not eps*sqrt(p*)^m*zeta^j");
    }
    prof.epsilon = eps;
    return prof;
}

}  // namespace ortho
