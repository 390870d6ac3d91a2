#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ldpclab/rng.hpp"

namespace ldpclab {

// Bit vector over GF(2), packed into 64-bit words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    std::size_t weight() const;
    bool is_zero() const;

    BitVec& operator^=(const BitVec& rhs);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    // dot product mod 2
    bool parity_and(const BitVec& rhs) const;

    // index of lowest set bit, or size() if zero
    std::size_t lowest_set() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Row-major bit-packed GF(2) matrix. Trailing bits past `cols` stay zero.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return row(r).get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_data_[r].set(c, v); }

    const BitVec& row(std::size_t r) const { return rows_data_[r]; }
    BitVec& row(std::size_t r) { return rows_data_[r]; }

    BitVec multiply(const BitVec& x) const; // M x
    BitMatrix transposed() const;
    BitMatrix submatrix(const std::vector<std::size_t>& row_idx,
                        const std::vector<std::size_t>& col_idx) const;

    std::string to_json() const; // rows as hex strings, for debugging

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> rows_data_;
};

class LinearCode;

// GF(2) rank by word-level Gaussian elimination; pivots in ascending
// column order so echelon forms are reproducible.
std::size_t gf2_rank(BitMatrix m);

// Basis of {x : Mx = 0} in reduced row echelon form.
LinearCode kernel_basis(const BitMatrix& m);

// Subspace of Z_2^n given by a reduced-row-echelon basis.
class LinearCode {
public:
    LinearCode() = default;
    explicit LinearCode(std::size_t ambient) : ambient_(ambient) {}

    // Reduces the given spanning set; dependent vectors are dropped.
    static LinearCode from_spanning(std::size_t ambient, std::vector<BitVec> spanning);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<BitVec>& basis() const { return basis_; }

    bool contains(BitVec v) const;
    bool operator==(const LinearCode& rhs) const;

    // Dimension of the intersection with another code in the same ambient space.
    std::size_t intersection_dimension(const LinearCode& rhs) const;

    // Restriction of every codeword to the listed coordinates (repeats allowed;
    // the output ambient dimension is coords.size()).
    LinearCode project(const std::vector<std::size_t>& coords) const;

    // Uniformly random codeword: random GF(2) combination of the basis.
    BitVec uniform_codeword(RngStream& rng) const;

    // All 2^dim codewords in Gray-code order (first entry is 0).
    // Throws resource_error when dimension() > enumeration_cap.
    std::vector<BitVec> enumerate(std::size_t enumeration_cap = kEnumerationCap) const;

    // Visits every codeword without materializing the list.
    template <class Fn>
    void for_each_codeword(Fn&& fn, std::size_t enumeration_cap = kEnumerationCap) const;

    // Minimum weight of a nonzero codeword; by linearity this is also the
    // minimum pairwise Hamming distance. Zero-dimensional codes return ambient+1
    // (no nonzero word). Enumerates, so the cap applies.
    std::size_t min_nonzero_weight(std::size_t enumeration_cap = kEnumerationCap) const;

    static constexpr std::size_t kEnumerationCap = 25;

private:
    friend LinearCode kernel_basis(const BitMatrix& m);
    void check_enumerable(std::size_t cap) const;

    std::size_t ambient_ = 0;
    std::vector<BitVec> basis_;       // RREF rows
    std::vector<std::size_t> pivots_; // pivot column of each basis row
};

// Checks the hypothesis "every word has weight <= delta*n or >= (1-delta)*n"
// by enumeration. When the hypothesis holds, the dimension is provably at most
// 2*delta*n + 1; that bound is asserted. Returns whether the hypothesis held.
bool big_or_small_dimension_check(const LinearCode& code, double delta);

// Total variation distance between the uniform distributions on two subspaces
// of the same ambient space: computed from dim(A), dim(B), dim(A cap B).
double tv_uniform_subspaces(const LinearCode& a, const LinearCode& b);

template <class Fn>
void LinearCode::for_each_codeword(Fn&& fn, std::size_t enumeration_cap) const {
    check_enumerable(enumeration_cap);
    BitVec current(ambient_);
    fn(current);
    const std::uint64_t total = std::uint64_t(1) << dimension();
    for (std::uint64_t m = 1; m < total; ++m) {
        current ^= basis_[static_cast<std::size_t>(__builtin_ctzll(m))];
        fn(current);
    }
}

} // namespace ldpclab
