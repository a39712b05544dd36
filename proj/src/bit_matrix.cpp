#include "blrc/bit_matrix.hpp"

#include <bit>
#include <cassert>

#include "blrc/error.hpp"

namespace blrc {

BitVector BitVector::from_bits(std::span<const std::uint8_t> bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) v.set(i);
    }
    return v;
}

BitVector BitVector::from_support(std::size_t size, std::span<const std::size_t> support) {
    BitVector v(size);
    for (auto i : support) {
        if (i >= size) throw InvalidArgument("support index out of range");
        v.set(i);
    }
    return v;
}

BitVector& BitVector::operator^=(const BitVector& other) noexcept {
    assert(size_ == other.size_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

bool BitVector::dot(const BitVector& other) const noexcept {
    assert(size_ == other.size_);
    Word acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

std::size_t BitVector::weight() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVector::none() const noexcept {
    for (auto w : words_) {
        if (w) return false;
    }
    return true;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        Word bits = words_[w];
        while (bits) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<std::uint8_t> BitVector::to_bits() const {
    std::vector<std::uint8_t> out(size_);
    for (std::size_t i = 0; i < size_; ++i) out[i] = get(i) ? 1 : 0;
    return out;
}

std::size_t BitVector::first_set() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return size_;
}

std::string BitVector::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve((size_ + 3) / 4);
    for (std::size_t base = 0; base < size_; base += 4) {
        unsigned nibble = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            nibble <<= 1;
            if (base + j < size_ && get(base + j)) nibble |= 1;
        }
        out.push_back(kDigits[nibble]);
    }
    return out;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    BitMatrix m(0, cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw InvalidArgument("ragged matrix literal");
        BitVector v(cols);
        std::size_t c = 0;
        for (int x : r) v.set(c++, x != 0);
        m.append_row(std::move(v));
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::vector<BitVector> rows) {
    BitMatrix m(0, cols);
    for (auto& r : rows) m.append_row(std::move(r));
    return m;
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != cols_) throw InvalidArgument("row length does not match matrix width");
    rows_.push_back(std::move(row));
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        if (get(r, c)) v.set(r);
    }
    return v;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (auto c : rows_[r].support()) t.set(c, r);
    }
    return t;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> cols) const {
    BitMatrix out(rows(), cols.size());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (get(r, cols[j])) out.set(r, j);
        }
    }
    return out;
}

BitVector BitMatrix::left_multiply(const BitVector& x) const {
    if (x.size() != rows()) throw InvalidArgument("vector length does not match matrix rows");
    BitVector acc(cols_);
    for (auto r : x.support()) acc ^= rows_[r];
    return acc;
}

BitVector BitMatrix::right_multiply(const BitVector& x) const {
    if (x.size() != cols_) throw InvalidArgument("vector length does not match matrix columns");
    BitVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        if (rows_[r].dot(x)) out.set(r);
    }
    return out;
}

bool BitMatrix::is_zero() const noexcept {
    for (const auto& r : rows_) {
        if (!r.none()) return false;
    }
    return true;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("matrix product shape mismatch");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) out.row(r) = b.left_multiply(a.row(r));
    return out;
}

namespace {

// In-place Gauss-Jordan elimination; returns pivot columns.
std::vector<std::size_t> eliminate(BitMatrix& m, bool reduce_above) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t p = lead;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        if (p != lead) std::swap(m.row(p), m.row(lead));
        const std::size_t start = reduce_above ? 0 : lead + 1;
        for (std::size_t r = start; r < m.rows(); ++r) {
            if (r != lead && m.get(r, c)) m.row(r) ^= m.row(lead);
        }
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

}  // namespace

std::size_t rank2(const BitMatrix& m) {
    BitMatrix work = m;
    return eliminate(work, false).size();
}

RowEchelon rref2(const BitMatrix& m) {
    RowEchelon out{m, {}};
    out.pivot_cols = eliminate(out.reduced, true);
    return out;
}

BitMatrix nullspace2(const BitMatrix& m) {
    const auto [reduced, pivots] = rref2(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    BitMatrix basis(0, m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        BitVector v(m.cols());
        v.set(free);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (reduced.get(r, free)) v.set(pivots[r]);
        }
        basis.append_row(std::move(v));
    }
    return basis;
}

std::optional<BitVector> solve_left2(const BitMatrix& a, const BitVector& b) {
    if (a.rows() != a.cols()) throw InvalidArgument("solve_left2 needs a square matrix");
    if (b.size() != a.cols()) throw InvalidArgument("right-hand side length mismatch");
    const std::size_t n = a.rows();
    if (n == 0) return BitVector(0);
    // x A = b  <=>  A^T x^T = b^T; eliminate on [A^T | b^T].
    BitMatrix aug(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (a.get(c, r)) aug.set(r, c);
        }
        if (b.get(r)) aug.set(r, n);
    }
    const auto pivots = eliminate(aug, true);
    if (pivots.size() < n || pivots.back() != n - 1) return std::nullopt;
    BitVector x(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (aug.get(r, n)) x.set(r);
    }
    return x;
}

}  // namespace blrc
