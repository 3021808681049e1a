// Linear codes over GF(q): generator rows, reduced basis, membership,
// extension/augmentation, self-orthogonality and projectivity checks.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ortho/gf.hpp"

namespace ortho {

using Row = std::vector<Elem>;

// Reduced row echelon form; returns the nonzero rows and their pivot columns.
inline void rref(const Field& F, std::vector<Row>& rows, std::vector<std::size_t>* pivots = nullptr) {
    if (pivots) pivots->clear();
    std::size_t r = 0;
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Elem inv = F.inv(rows[r][c]);
        for (std::size_t j = c; j < n; ++j) rows[r][j] = F.mul(rows[r][j], inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Elem f = rows[i][c];
            for (std::size_t j = c; j < n; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    rows.resize(r);
}

class LinearCode {
   public:
    LinearCode(const Field& field, std::vector<Row> rows) : field_(&field), rows_(std::move(rows)) {
        if (rows_.empty()) throw std::invalid_argument("code: need at least one row (may be zero)");
        n_ = rows_[0].size();
        for (const Row& r : rows_)
            if (r.size() != n_) throw std::invalid_argument("code: ragged generator rows");
        basis_ = rows_;
        rref(*field_, basis_, &pivots_);
        if (basis_.empty()) {
            // zero code: keep an explicit zero row so n is not lost
            basis_.clear();
        }
    }

    static LinearCode zero(const Field& field, std::size_t n) {
        return LinearCode(field, {Row(n, 0)});
    }

    const Field& field() const { return *field_; }
    std::size_t n() const { return n_; }
    std::size_t k() const { return basis_.size(); }
    std::uint64_t q() const { return field_->q(); }
    const std::vector<Row>& rows() const { return rows_; }
    const std::vector<Row>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Row& word) const {
        if (word.size() != n_) return false;
        Row w = word;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            Elem c = w[pivots_[i]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) w[j] = field_->sub(w[j], field_->mul(c, basis_[i][j]));
        }
        for (Elem x : w)
            if (x) return false;
        return true;
    }

    bool contains_all_one() const { return contains(Row(n_, 1)); }

    Elem dot(const Row& a, const Row& b) const {
        Elem acc = 0;
        for (std::size_t i = 0; i < n_; ++i) acc = field_->add(acc, field_->mul(a[i], b[i]));
        return acc;
    }

    // True iff G G^T = 0 for a generating set, equivalently C is contained
    // in its dual (odd characteristic: c.c = 0 for all codewords).
    bool is_self_orthogonal() const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (std::size_t j = i; j < basis_.size(); ++j)
                if (dot(basis_[i], basis_[j]) != 0) return false;
        return true;
    }

    Row column(std::size_t j) const {
        Row col(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i) col[i] = basis_[i][j];
        return col;
    }

    bool has_zero_column(std::size_t* which = nullptr) const {
        for (std::size_t j = 0; j < n_; ++j) {
            bool zero = true;
            for (std::size_t i = 0; i < basis_.size() && zero; ++i)
                if (basis_[i][j]) zero = false;
            if (zero) {
                if (which) *which = j;
                return true;
            }
        }
        return false;
    }

    // Projective: no zero column and no two columns linearly dependent.
    // Columns are normalized so their first nonzero entry is 1 and then
    // checked for duplicates.
    bool is_projective(std::string* reason = nullptr) const {
        std::size_t zc;
        if (has_zero_column(&zc)) {
            if (reason) *reason = "zero column at index " + std::to_string(zc);
            return false;
        }
        std::set<Row> seen;
        for (std::size_t j = 0; j < n_; ++j) {
            Row col = column(j);
            Elem lead = 0;
            for (Elem x : col)
                if (x) {
                    lead = x;
                    break;
                }
            Elem inv = field_->inv(lead);
            for (Elem& x : col) x = field_->mul(x, inv);
            if (!seen.insert(col).second) {
                if (reason) *reason = "dependent columns (duplicate after normalization) at index " + std::to_string(j);
                return false;
            }
        }
        return true;
    }

    // Extended code: one appended coordinate making each row sum to zero.
    LinearCode extend() const {
        std::vector<Row> ext = rows_;
        for (Row& r : ext) {
            Elem s = 0;
            for (Elem x : r) s = field_->add(s, x);
            r.push_back(field_->neg(s));
        }
        if (ext.empty()) ext.push_back(Row(n_ + 1, 0));
        return LinearCode(*field_, std::move(ext));
    }

    // Augmented code: the all-1 row joins the span.  Requires 1 not in C.
    LinearCode augment() const {
        if (contains_all_one()) throw std::domain_error("augment: all-1 vector already in the code");
        std::vector<Row> rows = rows_;
        rows.push_back(Row(n_, 1));
        return LinearCode(*field_, std::move(rows));
    }

   private:
    const Field* field_;
    std::size_t n_ = 0;
    std::vector<Row> rows_;
    std::vector<Row> basis_;
    std::vector<std::size_t> pivots_;
};

// Basis of the dual code (null space of the generator matrix).
inline std::vector<Row> dual_basis(const LinearCode& C) {
    const Field& F = C.field();
    const std::size_t n = C.n(), k = C.k();
    const auto& basis = C.basis();
    const auto& pivots = C.pivots();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<Row> dual;
    dual.reserve(n - k);
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Row w(n, 0);
        w[c] = 1;
        for (std::size_t i = 0; i < k; ++i) w[pivots[i]] = F.neg(basis[i][c]);
        dual.push_back(std::move(w));
    }
    return dual;
}

}  // namespace ortho
