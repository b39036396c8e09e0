#ifndef PIN_BITMATRIX_HPP
#define PIN_BITMATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pin {

// Bit vector packed into 64-bit words; all arithmetic modulo 2.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(size_t size) : size_(size), w_((size + 63) / 64, 0) {}

    size_t size() const { return size_; }
    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(size_t i, bool v) {
        uint64_t bit = uint64_t{1} << (i & 63);
        if (v) w_[i >> 6] |= bit;
        else w_[i >> 6] &= ~bit;
    }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    void xor_with(const BitVector& other);
    bool any() const;
    // Parity of the AND with another vector of the same size.
    bool dot(const BitVector& other) const;

    bool operator==(const BitVector&) const = default;
    const std::vector<uint64_t>& words() const { return w_; }
    std::string to_string() const; // "0101..."

private:
    size_t size_ = 0;
    std::vector<uint64_t> w_;
};

struct BitVectorHash {
    size_t operator()(const BitVector& v) const;
};

// Dense GF(2) matrix, row-major over BitVector rows.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix identity(size_t n);

    size_t row_count() const { return rows_.size(); }
    size_t col_count() const { return cols_; }
    bool get(size_t r, size_t c) const { return rows_[r].get(c); }
    void set(size_t r, size_t c, bool v) { rows_[r].set(c, v); }
    const BitVector& row(size_t r) const { return rows_[r]; }
    void append_row(BitVector row);
    void append_rows(const BitMatrix& other);

    BitVector multiply(const BitVector& x) const;

    // Matrix restricted to the given column subset, in the given order.
    BitMatrix select_columns(const std::vector<size_t>& cols) const;

    size_t rank() const;
    // Row echelon (in fact reduced) form; pivot columns in increasing order.
    struct Echelon {
        BitMatrix mat;
        std::vector<size_t> pivot_cols;
    };
    Echelon reduced_echelon() const;

    // Basis of {x : Ax = 0}.
    std::vector<BitVector> kernel_basis() const;

    // One solution of Ax = b, or nullopt when inconsistent; *unique reports
    // whether the solution is unique (rank == cols).
    static std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b,
                                          bool* unique = nullptr);

private:
    size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

} // namespace pin

#endif
