#pragma once

// Brute-force reference routines used only by the tests. They work on plain
// 0/1 vectors and never call into the library's elimination, search or
// hitting-set code, so they check it along an independent route.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "blrc/geometry.hpp"

namespace oracle {

using Row = std::vector<int>;
using Matrix = std::vector<Row>;

inline Matrix incidence(const blrc::IncidenceStructure& inc) {
    Matrix m(inc.num_lines(), Row(inc.num_points(), 0));
    for (std::size_t j = 0; j < inc.num_lines(); ++j) {
        for (auto p : inc.line(j)) m[j][p] = 1;
    }
    return m;
}

/// Rank over GF(2) by textbook elimination on int rows.
inline std::size_t rank(Matrix m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != rank && m[r][c]) {
                for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

/// Every vector of the row space of `m` (2^rank of them), as sorted supports.
/// Used as the dual code when `m` is the incidence matrix.
inline std::set<std::vector<std::size_t>> row_space_supports(const Matrix& m) {
    // Keep an independent subset of rows first so the enumeration is 2^rank.
    Matrix basis;
    for (const auto& row : m) {
        Matrix trial = basis;
        trial.push_back(row);
        if (rank(trial) > basis.size()) basis.push_back(row);
    }
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    std::set<std::vector<std::size_t>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
        Row v(cols, 0);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (mask >> b & 1) {
                for (std::size_t c = 0; c < cols; ++c) v[c] ^= basis[b][c];
            }
        }
        std::vector<std::size_t> support;
        for (std::size_t c = 0; c < cols; ++c) {
            if (v[c]) support.push_back(c);
        }
        out.insert(std::move(support));
    }
    return out;
}

/// Supports of weight <= max_weight in the row space of `m` (at most 64 columns),
/// walking all 2^rank combinations in Gray-code order.
inline std::set<std::vector<std::size_t>> low_weight_row_space(const Matrix& m, std::size_t max_weight) {
    std::vector<std::uint64_t> basis;
    for (const auto& row : m) {
        std::uint64_t bits = 0;
        for (std::size_t c = 0; c < row.size(); ++c) bits |= std::uint64_t(row[c] & 1) << c;
        // Reduce against the current basis by leading bit.
        for (auto b : basis) bits = std::min(bits, bits ^ b);
        if (bits) {
            basis.push_back(bits);
            std::sort(basis.rbegin(), basis.rend());
        }
    }
    std::set<std::vector<std::size_t>> out;
    std::uint64_t v = 0;
    for (std::uint64_t step = 0; step < (std::uint64_t{1} << basis.size()); ++step) {
        if (step) v ^= basis[static_cast<std::size_t>(__builtin_ctzll(step))];
        if (static_cast<std::size_t>(__builtin_popcountll(v)) > max_weight) continue;
        std::vector<std::size_t> support;
        for (std::size_t c = 0; c < 64; ++c) {
            if (v >> c & 1) support.push_back(c);
        }
        out.insert(std::move(support));
    }
    return out;
}

/// Omega_r(i) from an enumerated dual code.
inline std::vector<std::vector<std::size_t>> omega(const std::set<std::vector<std::size_t>>& dual, std::size_t i,
                                                   std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : dual) {
        if (s.size() <= r + 1 && std::binary_search(s.begin(), s.end(), i)) out.push_back(s);
    }
    return out;
}

/// Minimum hitting set size by trying all subsets of the union, smallest first.
inline std::size_t min_hitting_set_size(const std::vector<std::vector<std::size_t>>& sets) {
    std::vector<std::size_t> universe;
    for (const auto& s : sets) universe.insert(universe.end(), s.begin(), s.end());
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    const std::size_t u = universe.size();
    std::size_t best = u;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size >= best) continue;
        bool all = true;
        for (const auto& s : sets) {
            bool hit = false;
            for (auto e : s) {
                const auto idx = static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), e) -
                                                          universe.begin());
                if (mask >> idx & 1) hit = true;
            }
            if (!hit) {
                all = false;
                break;
            }
        }
        if (all) best = size;
    }
    return best;
}

/// Axiom 4 count straight from the definition: pairs (Q, M) with P on M and Q on B.
inline std::size_t alpha_pairs(const blrc::IncidenceStructure& inc, std::size_t p, std::size_t b) {
    std::size_t count = 0;
    const auto& line_b = inc.line(b);
    for (std::size_t m = 0; m < inc.num_lines(); ++m) {
        const auto& line_m = inc.line(m);
        if (!std::binary_search(line_m.begin(), line_m.end(), p)) continue;
        for (auto q : line_b) count += std::binary_search(line_m.begin(), line_m.end(), q);
    }
    return count;
}

}  // namespace oracle
