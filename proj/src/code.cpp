#include "blrc/code.hpp"

#include <cmath>

#include "blrc/error.hpp"

namespace blrc {

BlrcCode build_code(const IncidenceStructure& inc) {
    BlrcCode code;
    code.pg_ = validate_pg(inc);
    code.geometry_ = inc;
    code.incidence_ = incidence_matrix(inc);
    const std::size_t n = inc.num_points();

    // Greedy independent rows in canonical order, tracked with an echelon basis
    // keyed by leading coordinate.
    std::vector<std::optional<BitVector>> basis(n);
    code.parity_check_ = BitMatrix(0, n);
    for (std::size_t j = 0; j < code.incidence_.rows(); ++j) {
        BitVector v = code.incidence_.row(j);
        for (std::size_t lead = v.first_set(); lead < n; lead = v.first_set()) {
            if (!basis[lead]) {
                basis[lead] = v;
                break;
            }
            v ^= *basis[lead];
        }
        if (!v.none()) {
            code.parity_check_.append_row(code.incidence_.row(j));
            code.parity_rows_.push_back(j);
        }
    }

    const std::size_t m = code.parity_check_.rows();
    if (m == n) throw InvalidArgument("degenerate code (full-rank incidence): k = 0");
    const auto [reduced, pivots] = rref2(code.parity_check_);

    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t c = 0; c < n; ++c) {
        if (!is_pivot[c]) code.info_set_.push_back(c);
    }
    for (std::size_t r = 0; r < m; ++r) {
        bool any = false;
        for (auto c : code.info_set_) any = any || reduced.get(r, c);
        if (!any) {
            throw InvalidArgument("all-zero Q row: coordinate " + std::to_string(pivots[r]) +
                                  " is zero in every codeword");
        }
    }

    code.generator_ = BitMatrix(code.info_set_.size(), n);
    for (std::size_t row = 0; row < code.info_set_.size(); ++row) {
        const auto c = code.info_set_[row];
        code.generator_.set(row, c);
        for (std::size_t r = 0; r < m; ++r) {
            if (reduced.get(r, c)) code.generator_.set(row, pivots[r]);
        }
    }
    return code;
}

BitVector encode(const BlrcCode& code, const BitVector& message) {
    if (message.size() != code.k()) {
        throw InvalidArgument("message has " + std::to_string(message.size()) + " symbols, expected k = " +
                              std::to_string(code.k()));
    }
    return code.generator().left_multiply(message);
}

std::vector<std::uint8_t> encode(const BlrcCode& code, std::span<const std::uint8_t> message) {
    return encode(code, BitVector::from_bits(message)).to_bits();
}

namespace {

void check_coords(const BlrcCode& code, std::span<const std::size_t> coords) {
    if (coords.size() != code.k()) {
        throw InvalidArgument("need exactly k = " + std::to_string(code.k()) + " coordinates, got " +
                              std::to_string(coords.size()));
    }
    for (auto c : coords) {
        if (c >= code.n()) throw InvalidArgument("coordinate " + std::to_string(c) + " out of range");
    }
}

}  // namespace

BitVector reconstruct(const BlrcCode& code, std::span<const std::size_t> coords, const BitVector& values) {
    check_coords(code, coords);
    if (values.size() != coords.size()) throw InvalidArgument("value count does not match coordinate count");
    auto solution = solve_left2(code.generator().select_columns(coords), values);
    if (!solution) throw InvalidArgument("not an information set");
    return *solution;
}

std::vector<std::uint8_t> reconstruct(const BlrcCode& code, std::span<const std::size_t> coords,
                                      std::span<const std::uint8_t> values) {
    return reconstruct(code, coords, BitVector::from_bits(values)).to_bits();
}

bool is_information_set(const BlrcCode& code, std::span<const std::size_t> coords) {
    check_coords(code, coords);
    return rank2(code.generator().select_columns(coords)) == code.k();
}

double binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    k = std::min(k, n - k);
    double result = 1.0;
    for (std::size_t i = 1; i <= k; ++i) {
        result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return std::round(result);
}

std::optional<std::vector<std::size_t>> find_non_information_set(const BlrcCode& code, double guard) {
    const std::size_t n = code.n();
    const std::size_t k = code.k();
    if (binomial(n, k) > guard) {
        throw GuardExceeded("instance too large for exhaustive MDS check: binomial(" + std::to_string(n) + ", " +
                            std::to_string(k) + ") exceeds the guard");
    }
    std::vector<std::size_t> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;
    while (true) {
        if (!is_information_set(code, subset)) return subset;
        // Next k-subset in colex order.
        std::size_t i = 0;
        while (i < k && subset[i] + 1 == (i + 1 < k ? subset[i + 1] : n)) ++i;
        if (i == k) return std::nullopt;
        ++subset[i];
        for (std::size_t j = 0; j < i; ++j) subset[j] = j;
    }
}

bool is_mds(const BlrcCode& code, double guard) { return !find_non_information_set(code, guard).has_value(); }

CodeRate rate(const BlrcCode& code) {
    const auto n = static_cast<std::int64_t>(code.n());
    const auto k = static_cast<std::int64_t>(code.k());
    return {Rational(k, n), Rational(n, k)};
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace blrc
