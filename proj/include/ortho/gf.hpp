// Finite fields GF(p^d) with full log/exp tables, plus subfield embeddings
// and trace/norm maps between them.
//
// Element codes are integers in [0, p^d): the base-p digits of a code are the
// polynomial coefficients, constant term least significant.  The modulus is
// always the lexicographically smallest primitive polynomial of its degree,
// so codes are reproducible across runs.

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ortho {

using Elem = std::uint32_t;

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

constexpr std::uint64_t kDefaultFieldBudget = std::uint64_t(1) << 22;

namespace detail {

// Polynomial arithmetic over GF(p), coefficient vectors with c[0] the
// constant term.  Only used to certify the modulus at field creation.
inline std::vector<Elem> polymulmod(const std::vector<Elem>& a, const std::vector<Elem>& b,
                                    const std::vector<Elem>& mod, Elem p) {
    const std::size_t d = mod.size() - 1;
    std::vector<std::uint64_t> acc(std::max(a.size() + b.size() - 1, d), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += std::uint64_t(a[i]) * b[j];
    }
    for (std::size_t i = acc.size(); i-- > d;) {
        std::uint64_t c = acc[i] % p;
        if (i >= d && c) {
            // acc -= c * x^(i-d) * mod ; mod is monic
            for (std::size_t j = 0; j <= d; ++j) {
                std::uint64_t sub = c * mod[j] % p;
                std::size_t pos = i - d + j;
                acc[pos] = (acc[pos] + std::uint64_t(p) * p - sub) % p;
            }
        }
    }
    std::vector<Elem> r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = Elem(acc[i] % p);
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
}

inline std::vector<Elem> polypowmod(std::vector<Elem> base, std::uint64_t e, const std::vector<Elem>& mod, Elem p) {
    std::vector<Elem> r{1};
    while (e) {
        if (e & 1) r = polymulmod(r, base, mod, p);
        base = polymulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

inline bool poly_is_one(const std::vector<Elem>& a) { return a.size() == 1 && a[0] == 1; }

// x has order q-1 in GF(p)[x]/(f) iff x^(q-1) = 1 and x^((q-1)/r) != 1 for
// every prime r | q-1.  Together with irreducibility this is primitivity.
inline bool is_primitive_modulus(const std::vector<Elem>& mod, Elem p, std::uint64_t q) {
    const std::vector<Elem> x{0, 1};
    if (mod[0] == 0) return false;
    if (!poly_is_one(polypowmod(x, q - 1, mod, p))) return false;
    for (std::uint64_t r : prime_factors(q - 1))
        if (poly_is_one(polypowmod(x, (q - 1) / r, mod, p))) return false;
    return true;
}

inline bool is_irreducible(const std::vector<Elem>& mod, Elem p, std::uint32_t d) {
    // x^(p^d) == x mod f, and x^(p^(d/r)) != x for prime r | d.
    const std::vector<Elem> x{0, 1};
    auto frob_pow = [&](std::uint32_t k) {
        std::vector<Elem> r = x;
        for (std::uint32_t i = 0; i < k; ++i) r = polypowmod(r, p, mod, p);
        return r;
    };
    if (frob_pow(d) != x) return false;
    for (std::uint64_t r : prime_factors(d))
        if (frob_pow(d / std::uint32_t(r)) == x) return false;
    return true;
}

}  // namespace detail

// One finite field GF(p^d).  Immutable after construction; share freely.
class Field {
   public:
    Field(std::uint32_t p, std::uint32_t d, std::uint64_t budget = kDefaultFieldBudget) : p_(p), deg_(d) {
        if (!is_prime_u64(p)) throw std::invalid_argument("field: p = " + std::to_string(p) + " is not prime");
        if (d < 1) throw std::invalid_argument("field: degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < d; ++i) {
            q *= p;
            if (q > budget) throw std::invalid_argument("field: p^d exceeds table budget");
        }
        q_ = q;
        find_modulus();
        build_tables();
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t degree() const { return deg_; }
    std::uint64_t q() const { return q_; }
    // Modulus coefficients c_0..c_d, monic.
    const std::vector<Elem>& modulus() const { return mod_; }
    Elem generator() const { return exp_[1]; }

    Elem add(Elem a, Elem b) const {
        if (deg_ == 1) {
            Elem s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        Elem r = 0, place = 1;
        for (std::uint32_t i = 0; i < deg_; ++i) {
            Elem s = a % p_ + b % p_;
            if (s >= p_) s -= p_;
            r += s * place;
            a /= p_;
            b /= p_;
            place *= p_;
        }
        return r;
    }

    Elem neg(Elem a) const {
        if (deg_ == 1) return a ? p_ - a : 0;
        Elem r = 0, place = 1;
        for (std::uint32_t i = 0; i < deg_; ++i) {
            Elem da = a % p_;
            r += (da ? p_ - da : 0) * place;
            a /= p_;
            place *= p_;
        }
        return r;
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (!a || !b) return 0;
        return exp_[mod_order(std::uint64_t(log_[a]) + log_[b])];
    }

    Elem inv(Elem a) const {
        if (!a) throw std::domain_error("field: inverse of zero");
        std::uint64_t l = log_[a];
        return exp_[l ? q_ - 1 - l : 0];
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    // a^e with e reduced mod q-1 (a != 0); 0^0 = 1 by convention.
    Elem pow(Elem a, std::uint64_t e) const {
        if (!a) return e == 0 ? 1 : 0;
        std::uint64_t l = std::uint64_t(log_[a]) * (e % (q_ - 1)) % (q_ - 1);
        return exp_[l];
    }

    Elem frobenius(Elem a) const { return pow(a, p_); }

    std::uint64_t log(Elem a) const {
        if (!a) throw std::domain_error("field: log of zero");
        return log_[a];
    }
    Elem exp(std::uint64_t i) const { return exp_[mod_order(i)]; }

    // Trace down to the prime field; result is a residue in [0, p).
    Elem trace_to_prime(Elem a) const {
        Elem acc = 0, x = a;
        for (std::uint32_t i = 0; i < deg_; ++i) {
            acc = add(acc, x);
            x = frobenius(x);
        }
        return acc;  // lies in [0, p): constant polynomial
    }

    std::vector<Elem> digits(Elem a) const {
        std::vector<Elem> d(deg_);
        for (std::uint32_t i = 0; i < deg_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    // Optional flat addition table for enumeration hot loops.
    const std::vector<Elem>* add_table() const {
        std::call_once(addtab_once_, [this] {
            if (q_ <= 2048) {
                addtab_.resize(q_ * q_);
                for (std::uint64_t a = 0; a < q_; ++a)
                    for (std::uint64_t b = 0; b < q_; ++b) addtab_[a * q_ + b] = add(Elem(a), Elem(b));
            }
        });
        return addtab_.empty() ? nullptr : &addtab_;
    }

    std::string descriptor_line() const {
        std::string s = std::to_string(p_) + " " + std::to_string(deg_);
        for (Elem c : mod_) s += " " + std::to_string(c);
        return s;
    }

   private:
    std::uint64_t mod_order(std::uint64_t i) const { return i % (q_ - 1); }

    void find_modulus() {
        // Lexicographically smallest primitive monic polynomial, coefficient
        // order (c_{d-1}, ..., c_0).
        std::vector<Elem> cand(deg_ + 1);
        cand[deg_] = 1;
        for (std::uint64_t code = 0; code < q_; ++code) {
            // lex order on (c_{d-1}, ..., c_0) is numeric order of code with
            // coefficient i at base-p place i
            std::uint64_t c = code;
            for (std::uint32_t i = 0; i < deg_; ++i) {
                cand[i] = Elem(c % p_);
                c /= p_;
            }
            if (deg_ == 1) {
                // Monic linear x + c0: primitive iff -c0 generates GF(p)*.
                if (cand[0] == 0) continue;
                std::uint64_t root = p_ - cand[0];
                bool prim = true;
                for (std::uint64_t r : prime_factors(p_ - 1)) {
                    std::uint64_t t = 1, b = root, e = (p_ - 1) / r;
                    while (e) {
                        if (e & 1) t = t * b % p_;
                        b = b * b % p_;
                        e >>= 1;
                    }
                    if (t == 1) {
                        prim = false;
                        break;
                    }
                }
                if (prim) {
                    mod_ = cand;
                    return;
                }
                continue;
            }
            if (!detail::is_irreducible(cand, p_, deg_)) continue;
            if (!detail::is_primitive_modulus(cand, p_, q_)) continue;
            mod_ = cand;
            return;
        }
        throw std::logic_error("field: no primitive modulus found");
    }

    void build_tables() {
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        if (deg_ == 1) {
            Elem alpha = Elem(p_ - mod_[0]);
            Elem x = 1;
            for (std::uint64_t i = 0; i + 1 < q_; ++i) {
                exp_[i] = x;
                log_[x] = i;
                x = Elem(std::uint64_t(x) * alpha % p_);
            }
            return;
        }
        // exp[i+1] = exp[i] * x reduced by the modulus, all on digit codes.
        std::vector<Elem> cur(deg_, 0);
        cur[0] = 1;
        for (std::uint64_t i = 0; i + 1 < q_; ++i) {
            Elem code = 0, place = 1;
            for (std::uint32_t j = 0; j < deg_; ++j) {
                code += cur[j] * place;
                place *= p_;
            }
            if (code == 1 && i > 0) throw std::logic_error("field: modulus not primitive");
            exp_[i] = code;
            log_[code] = i;
            Elem top = cur[deg_ - 1];
            for (std::uint32_t j = deg_ - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            if (top) {
                for (std::uint32_t j = 0; j < deg_; ++j) {
                    Elem sub = Elem(std::uint64_t(top) * mod_[j] % p_);
                    cur[j] = Elem((cur[j] + p_ - sub) % p_);
                }
            }
        }
    }

    std::uint32_t p_, deg_;
    std::uint64_t q_;
    std::vector<Elem> mod_;
    std::vector<Elem> exp_;
    std::vector<std::uint64_t> log_;
    mutable std::vector<Elem> addtab_;
    mutable std::once_flag addtab_once_;
};

// Shared registry: fields are immutable, build each (p, d) once.
inline const Field& get_field(std::uint32_t p, std::uint32_t d, std::uint64_t budget = kDefaultFieldBudget) {
    static std::mutex mu;
    static std::unordered_map<std::uint64_t, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    std::uint64_t key = std::uint64_t(p) << 32 | d;
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<Field>(p, d, budget)).first;
    return *it->second;
}

inline const Field& field_create(std::uint32_t p, std::uint32_t d, std::uint64_t budget = kDefaultFieldBudget) {
    return get_field(p, d, budget);
}

// Splits a prime power q = p^e; rejects anything else.
inline std::pair<std::uint32_t, std::uint32_t> parse_prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    for (std::uint32_t p = 2; std::uint64_t(p) * p <= q; ++p) {
        if (q % p == 0) {
            std::uint32_t e = 0;
            std::uint64_t t = q;
            while (t % p == 0) {
                t /= p;
                ++e;
            }
            if (t != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
            return {p, e};
        }
    }
    return {std::uint32_t(q), 1};
}

// Embedding of GF(p^s) into GF(p^d) for s | d, with trace and norm maps.
class SubfieldMap {
   public:
    SubfieldMap(const Field& big, const Field& sub) : big_(&big), sub_(&sub) {
        if (big.p() != sub.p() || big.degree() % sub.degree() != 0)
            throw std::invalid_argument("subfield: degree must divide and characteristic must match");
        stride_ = big.degree() / sub.degree();
        build_embedding();
    }

    const Field& big() const { return *big_; }
    const Field& sub() const { return *sub_; }
    std::uint32_t sub_degree() const { return sub_->degree(); }

    Elem embed(Elem sub_code) const { return embed_[sub_code]; }

    bool in_subfield(Elem big_code) const { return from_big_[big_code] >= 0; }

    Elem to_sub(Elem big_code) const {
        std::int64_t v = from_big_[big_code];
        if (v < 0) throw std::domain_error("subfield: element not in subfield image");
        return Elem(v);
    }

    // tr(x) = sum of the stride-Frobenius images; returns a sub-field code.
    Elem trace(Elem x) const {
        Elem acc = 0, t = x;
        std::uint64_t ps = sub_->q();
        for (std::uint32_t i = 0; i < stride_; ++i) {
            acc = big_->add(acc, t);
            t = big_->pow(t, ps);
        }
        return to_sub(acc);
    }

    Elem norm(Elem x) const {
        if (!x) return 0;
        std::uint64_t e = (big_->q() - 1) / (sub_->q() - 1);
        return to_sub(big_->pow(x, e));
    }

    // Power basis 1, g, g^2, ... of the big field over the subfield.
    std::vector<Elem> basis() const {
        std::vector<Elem> b(stride_);
        Elem g = big_->generator(), cur = 1;
        for (std::uint32_t i = 0; i < stride_; ++i) {
            b[i] = cur;
            cur = big_->mul(cur, g);
        }
        return b;
    }

   private:
    void build_embedding() {
        embed_.assign(sub_->q(), 0);
        from_big_.assign(big_->q(), -1);
        from_big_[0] = 0;
        if (sub_->degree() == 1) {
            // Prime subfield: constant polynomials carry the same code.
            for (Elem r = 0; r < sub_->q(); ++r) {
                embed_[r] = r;
                from_big_[r] = r;
            }
            return;
        }
        // Root of the subfield modulus inside the big field, smallest code.
        std::uint64_t step = (big_->q() - 1) / (sub_->q() - 1);
        const auto& msub = sub_->modulus();
        Elem root = 0;
        bool found = false;
        for (std::uint64_t k = 0; k + 1 < sub_->q(); ++k) {
            Elem cand = big_->exp(k * step);
            Elem val = 0;
            for (std::size_t i = msub.size(); i-- > 0;) val = big_->add(big_->mul(val, cand), msub[i]);
            if (val == 0 && (!found || cand < root)) {
                root = cand;
                found = true;
            }
        }
        if (!found) throw std::logic_error("subfield: modulus has no root in big field");
        for (std::uint64_t j = 0; j + 1 < sub_->q(); ++j) {
            Elem s = sub_->exp(j);
            Elem b = big_->pow(root, j);
            embed_[s] = b;
            from_big_[b] = s;
        }
    }

    const Field* big_;
    const Field* sub_;
    std::uint32_t stride_;
    std::vector<Elem> embed_;
    std::vector<std::int64_t> from_big_;
};

inline const SubfieldMap& get_subfield_map(const Field& big, const Field& sub) {
    static std::mutex mu;
    static std::unordered_map<std::uint64_t, std::unique_ptr<SubfieldMap>> cache;
    std::lock_guard<std::mutex> lock(mu);
    std::uint64_t key = (std::uint64_t(big.p()) << 40) | (std::uint64_t(big.degree()) << 20) | sub.degree();
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<SubfieldMap>(big, sub)).first;
    return *it->second;
}

// Quadratic multiplicative character: 0 at zero, +1 on nonzero squares.
inline int quadratic_character(const Field& f, Elem x) {
    if (f.p() == 2) throw std::domain_error("quadratic character needs odd characteristic");
    if (!x) return 0;
    return f.log(x) % 2 == 0 ? 1 : -1;
}

}  // namespace ortho
