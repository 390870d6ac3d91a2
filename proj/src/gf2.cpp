#include "ldpclab/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "ldpclab/errors.hpp"

namespace ldpclab {

std::size_t BitVec::weight() const {
    std::size_t w = 0;
    for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

bool BitVec::is_zero() const {
    for (auto word : words_)
        if (word != 0) return false;
    return true;
}

BitVec& BitVec::operator^=(const BitVec& rhs) {
    if (rhs.size_ != size_) throw std::invalid_argument("BitVec xor: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
    return *this;
}

bool BitVec::parity_and(const BitVec& rhs) const {
    if (rhs.size_ != size_) throw std::invalid_argument("BitVec dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        acc ^= static_cast<std::uint64_t>(std::popcount(words_[i] & rhs.words_[i])) & 1;
    return acc & 1;
}

std::size_t BitVec::lowest_set() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return size_;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), rows_data_(rows, BitVec(cols)) {}

BitVec BitMatrix::multiply(const BitVec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("BitMatrix multiply: size mismatch");
    BitVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.set(r, rows_data_[r].parity_and(x));
    return out;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto& words = rows_data_[r].words();
        for (std::size_t wi = 0; wi < words.size(); ++wi) {
            std::uint64_t w = words[wi];
            while (w != 0) {
                const std::size_t c = wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
                out.set(c, r, true);
                w &= w - 1;
            }
        }
    }
    return out;
}

BitMatrix BitMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
    BitMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r)
        for (std::size_t c = 0; c < col_idx.size(); ++c)
            if (get(row_idx[r], col_idx[c])) out.set(r, c, true);
    return out;
}

std::string BitMatrix::to_json() const {
    static const char* hex = "0123456789abcdef";
    std::string out = "{\"rows\":" + std::to_string(rows_) + ",\"cols\":" + std::to_string(cols_) +
                      ",\"data\":[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) out += ',';
        out += '"';
        const std::size_t nibbles = (cols_ + 3) / 4;
        for (std::size_t ni = nibbles; ni-- > 0;) {
            const auto& words = rows_data_[r].words();
            const std::uint64_t w = (ni * 4 < cols_) ? words[(ni * 4) >> 6] : 0;
            out += hex[(w >> ((ni * 4) & 63)) & 0xf];
        }
        out += '"';
    }
    out += "]}";
    return out;
}

namespace {

// In-place RREF with ascending pivot columns. Returns pivot columns.
std::vector<std::size_t> rref_in_place(std::vector<BitVec>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < cols && next_row < rows.size(); ++col) {
        std::size_t pivot = next_row;
        while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[next_row], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next_row && rows[r].get(col)) rows[r] ^= rows[next_row];
        pivots.push_back(col);
        ++next_row;
    }
    rows.resize(pivots.size());
    return pivots;
}

} // namespace

std::size_t gf2_rank(BitMatrix m) {
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(std::move(m.row(r)));
    return rref_in_place(rows, m.cols()).size();
}

LinearCode kernel_basis(const BitMatrix& m) {
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    const std::vector<std::size_t> pivots = rref_in_place(rows, m.cols());

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    LinearCode code(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        BitVec v(m.cols());
        v.set(free, true);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (rows[r].get(free)) v.set(pivots[r], true);
        code.basis_.push_back(std::move(v));
    }
    // The free-variable basis is already in RREF with the free columns
    // as pivots; re-reduce to keep the canonical ascending-pivot form.
    code.pivots_ = rref_in_place(code.basis_, m.cols());
    return code;
}

LinearCode LinearCode::from_spanning(std::size_t ambient, std::vector<BitVec> spanning) {
    for (const auto& v : spanning)
        if (v.size() != ambient) throw std::invalid_argument("from_spanning: bad vector length");
    LinearCode code(ambient);
    code.basis_ = std::move(spanning);
    code.pivots_ = rref_in_place(code.basis_, ambient);
    return code;
}

bool LinearCode::contains(BitVec v) const {
    if (v.size() != ambient_) throw std::invalid_argument("contains: length mismatch");
    for (std::size_t r = 0; r < basis_.size(); ++r)
        if (v.get(pivots_[r])) v ^= basis_[r];
    return v.is_zero();
}

bool LinearCode::operator==(const LinearCode& rhs) const {
    // RREF bases are canonical
    return ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
}

std::size_t LinearCode::intersection_dimension(const LinearCode& rhs) const {
    if (ambient_ != rhs.ambient_)
        throw std::invalid_argument("intersection_dimension: ambient mismatch");
    std::vector<BitVec> stacked = basis_;
    stacked.insert(stacked.end(), rhs.basis_.begin(), rhs.basis_.end());
    const std::size_t dim_sum_space = rref_in_place(stacked, ambient_).size();
    return dimension() + rhs.dimension() - dim_sum_space;
}

LinearCode LinearCode::project(const std::vector<std::size_t>& coords) const {
    std::vector<BitVec> restricted;
    restricted.reserve(basis_.size());
    for (const auto& v : basis_) {
        BitVec r(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i] >= ambient_) throw std::invalid_argument("project: coord out of range");
            if (v.get(coords[i])) r.set(i, true);
        }
        restricted.push_back(std::move(r));
    }
    return from_spanning(coords.size(), std::move(restricted));
}

BitVec LinearCode::uniform_codeword(RngStream& rng) const {
    BitVec out(ambient_);
    for (const auto& b : basis_)
        if (rng.next_bool()) out ^= b;
    return out;
}

void LinearCode::check_enumerable(std::size_t cap) const {
    if (dimension() > cap)
        throw resource_error("code dimension " + std::to_string(dimension()) +
                             " exceeds enumeration cap " + std::to_string(cap));
}

std::vector<BitVec> LinearCode::enumerate(std::size_t enumeration_cap) const {
    std::vector<BitVec> out;
    out.reserve(std::size_t(1) << dimension());
    for_each_codeword([&](const BitVec& v) { out.push_back(v); }, enumeration_cap);
    return out;
}

std::size_t LinearCode::min_nonzero_weight(std::size_t enumeration_cap) const {
    std::size_t best = ambient_ + 1;
    for_each_codeword(
        [&](const BitVec& v) {
            const std::size_t w = v.weight();
            if (w != 0 && w < best) best = w;
        },
        enumeration_cap);
    return best;
}

bool big_or_small_dimension_check(const LinearCode& code, double delta) {
    if (delta >= 1.0 / 3.0) throw std::invalid_argument("big_or_small: requires delta < 1/3");
    const double n = static_cast<double>(code.ambient_dim());
    bool hypothesis = true;
    code.for_each_codeword([&](const BitVec& v) {
        const double w = static_cast<double>(v.weight());
        if (w > delta * n && w < (1.0 - delta) * n) hypothesis = false;
    });
    if (hypothesis && static_cast<double>(code.dimension()) > 2.0 * delta * n + 1.0)
        throw std::logic_error("big_or_small: dimension bound violated");
    return hypothesis;
}

double tv_uniform_subspaces(const LinearCode& a, const LinearCode& b) {
    if (a == b) return 0.0;
    const double c = static_cast<double>(a.intersection_dimension(b));
    const double da = static_cast<double>(a.dimension());
    const double db = static_cast<double>(b.dimension());
    const double shared = std::exp2(c) * std::abs(std::exp2(-da) - std::exp2(-db));
    return 0.5 * (shared + (1.0 - std::exp2(c - da)) + (1.0 - std::exp2(c - db)));
}

} // namespace ldpclab
