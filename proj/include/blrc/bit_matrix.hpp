#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace blrc {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

/// Fixed-length vector over GF(2), packed 64 coordinates per word.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

    /// From 0/1 values; any nonzero entry counts as 1.
    static BitVector from_bits(std::span<const std::uint8_t> bits);
    static BitVector from_support(std::size_t size, std::span<const std::size_t> support);

    std::size_t size() const noexcept { return size_; }

    bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value = true) noexcept {
        const Word mask = Word{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    BitVector& operator^=(const BitVector& other) noexcept;
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) noexcept { return lhs ^= rhs; }

    /// Inner product over GF(2).
    bool dot(const BitVector& other) const noexcept;

    std::size_t weight() const noexcept;
    bool none() const noexcept;
    std::vector<std::size_t> support() const;
    std::vector<std::uint8_t> to_bits() const;

    /// Lowest set coordinate, or size() when zero.
    std::size_t first_set() const noexcept;

    /// Hex string, coordinate 0 in the most significant bit of the first digit,
    /// zero padded at the end to a multiple of 4 coordinates.
    std::string to_hex() const;

    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;
    friend auto operator<=>(const BitVector&, const BitVector&) = default;

    static constexpr std::size_t word_count(std::size_t bits) noexcept {
        return (bits + kWordBits - 1) / kWordBits;
    }

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

/// Dense binary matrix stored as packed rows.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
    /// All rows must have `cols` coordinates.
    static BitMatrix from_rows(std::size_t cols, std::vector<BitVector> rows);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) noexcept { rows_[r].set(c, value); }

    const BitVector& row(std::size_t r) const noexcept { return rows_[r]; }
    BitVector& row(std::size_t r) noexcept { return rows_[r]; }
    void append_row(BitVector row);

    BitVector column(std::size_t c) const;
    BitMatrix transpose() const;
    /// Columns `cols` in the given order.
    BitMatrix select_columns(std::span<const std::size_t> cols) const;

    /// x * M for a row vector x of length rows().
    BitVector left_multiply(const BitVector& x) const;
    /// M * x^T for x of length cols().
    BitVector right_multiply(const BitVector& x) const;

    bool is_zero() const noexcept;

    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RowEchelon {
    BitMatrix reduced;
    std::vector<std::size_t> pivot_cols;
};

/// Dimension of the GF(2) row space.
std::size_t rank2(const BitMatrix& m);

/// Reduced row echelon form. Pivots are taken left to right, the lowest
/// eligible row first; zero rows are dropped from the bottom only, so the
/// result has the same shape as the input.
RowEchelon rref2(const BitMatrix& m);

/// Basis of {v : M v^T = 0}, one free column per basis row, free columns ascending.
BitMatrix nullspace2(const BitMatrix& m);

/// Solves x * A = b for square A; nullopt if A is singular.
std::optional<BitVector> solve_left2(const BitMatrix& a, const BitVector& b);

}  // namespace blrc
