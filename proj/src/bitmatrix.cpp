#include "pin/bitmatrix.hpp"

#include <bit>
#include <stdexcept>

namespace pin {

void BitVector::xor_with(const BitVector& other) {
    if (other.size_ != size_) throw std::invalid_argument("bit vector size mismatch");
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= other.w_[k];
}

bool BitVector::any() const {
    for (uint64_t w : w_)
        if (w) return true;
    return false;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.size_ != size_) throw std::invalid_argument("bit vector size mismatch");
    uint64_t acc = 0;
    for (size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & other.w_[k];
    return std::popcount(acc) & 1;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (size_t i = 0; i < size_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

size_t BitVectorHash::operator()(const BitVector& v) const {
    uint64_t h = 1469598103934665603ULL; // FNV offset
    for (uint64_t w : v.words()) {
        h ^= w;
        h *= 1099511628211ULL;
    }
    h ^= v.size();
    return static_cast<size_t>(h);
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != cols_) {
        if (row_count() == 0 && cols_ == 0) cols_ = row.size();
        else throw std::invalid_argument("row width mismatch");
    }
    rows_.push_back(std::move(row));
}

void BitMatrix::append_rows(const BitMatrix& other) {
    for (size_t r = 0; r < other.row_count(); ++r) append_row(other.row(r));
}

BitVector BitMatrix::multiply(const BitVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in multiply");
    BitVector y(row_count());
    for (size_t r = 0; r < row_count(); ++r) y.set(r, rows_[r].dot(x));
    return y;
}

BitMatrix BitMatrix::select_columns(const std::vector<size_t>& cols) const {
    BitMatrix out(row_count(), cols.size());
    for (size_t r = 0; r < row_count(); ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            if (get(r, cols[c])) out.set(r, c, true);
    return out;
}

BitMatrix::Echelon BitMatrix::reduced_echelon() const {
    Echelon ech{*this, {}};
    auto& rows = ech.mat.rows_;
    size_t pivot_row = 0;
    for (size_t c = 0; c < cols_ && pivot_row < rows.size(); ++c) {
        size_t r = pivot_row;
        while (r < rows.size() && !rows[r].get(c)) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[pivot_row], rows[r]);
        for (size_t k = 0; k < rows.size(); ++k)
            if (k != pivot_row && rows[k].get(c)) rows[k].xor_with(rows[pivot_row]);
        ech.pivot_cols.push_back(c);
        ++pivot_row;
    }
    return ech;
}

size_t BitMatrix::rank() const { return reduced_echelon().pivot_cols.size(); }

std::vector<BitVector> BitMatrix::kernel_basis() const {
    Echelon ech = reduced_echelon();
    std::vector<bool> is_pivot(cols_, false);
    std::vector<size_t> pivot_of_col(cols_, 0);
    for (size_t k = 0; k < ech.pivot_cols.size(); ++k) {
        is_pivot[ech.pivot_cols[k]] = true;
        pivot_of_col[ech.pivot_cols[k]] = k;
    }
    std::vector<BitVector> basis;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        BitVector v(cols_);
        v.set(free, true);
        for (size_t c = 0; c < cols_; ++c)
            if (is_pivot[c] && ech.mat.get(pivot_of_col[c], free)) v.set(c, true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVector> BitMatrix::solve(const BitMatrix& a, const BitVector& b,
                                          bool* unique) {
    if (b.size() != a.row_count()) throw std::invalid_argument("rhs size mismatch");
    // Eliminate on [A | b].
    BitMatrix aug(a.row_count(), a.col_count() + 1);
    for (size_t r = 0; r < a.row_count(); ++r) {
        BitVector row(a.col_count() + 1);
        for (size_t c = 0; c < a.col_count(); ++c)
            if (a.get(r, c)) row.set(c, true);
        if (b.get(r)) row.set(a.col_count(), true);
        aug.rows_[r] = std::move(row);
    }
    Echelon ech = aug.reduced_echelon();
    size_t n = a.col_count();
    size_t rank_a = 0;
    for (size_t c : ech.pivot_cols) {
        if (c == n) return std::nullopt; // pivot in the rhs column: inconsistent
        ++rank_a;
    }
    if (unique) *unique = rank_a == n;
    BitVector x(n);
    for (size_t k = 0; k < ech.pivot_cols.size(); ++k)
        if (ech.mat.get(k, n)) x.set(ech.pivot_cols[k], true); // free variables zero
    return x;
}

} // namespace pin
