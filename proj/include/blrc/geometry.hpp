#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "blrc/bit_matrix.hpp"

namespace blrc {

using PointSet = std::vector<std::size_t>;

/// Points 0..num_points-1 and a list of lines, each a strictly increasing point list.
///
/// The constructor checks structure only: indices in range, no repeated point
/// within a line, no repeated line. Geometric axioms are checked by validate_pg.
class IncidenceStructure {
public:
    IncidenceStructure() = default;
    /// Lines are sorted internally; line order is kept as given.
    IncidenceStructure(std::size_t num_points, std::vector<PointSet> lines, std::string label = {});

    std::size_t num_points() const noexcept { return num_points_; }
    std::size_t num_lines() const noexcept { return lines_.size(); }
    const std::vector<PointSet>& lines() const noexcept { return lines_; }
    const PointSet& line(std::size_t j) const noexcept { return lines_[j]; }
    const std::string& label() const noexcept { return label_; }

    /// Line indices through each point, ascending.
    std::vector<std::vector<std::size_t>> lines_through_points() const;

    /// Lines sorted lexicographically; points untouched.
    IncidenceStructure canonical() const;

    /// Equal point count and identical line lists (order-sensitive); label ignored.
    friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
        return a.num_points_ == b.num_points_ && a.lines_ == b.lines_;
    }

private:
    std::size_t num_points_ = 0;
    std::vector<PointSet> lines_;
    std::string label_;
};

enum class PgClass { Steiner2Design, Net, GeneralizedQuadrangle, Proper };

std::string_view to_string(PgClass c) noexcept;

struct PgParams {
    std::size_t s = 0;
    std::size_t t = 0;
    std::size_t alpha = 0;
    std::size_t num_points = 0;
    std::size_t num_lines = 0;
    PgClass pg_class = PgClass::Proper;
    /// Generalized quadrangle with s = 1 or t = 1 (a grid or its dual).
    bool grid_degenerate = false;

    friend bool operator==(const PgParams&, const PgParams&) = default;
};

/// Builds PgParams for a parameter triple, checking 1 <= alpha <= min(s+1, t+1)
/// and the integrality of the point and line counts. Throws InvalidArgument.
PgParams make_pg_params(std::size_t s, std::size_t t, std::size_t alpha);

/// Checks the four partial geometry axioms and returns the parameters.
/// Throws ValidationError naming the first failed check with a witness.
PgParams validate_pg(const IncidenceStructure& inc);

/// (s+1) x (s+1) grid; rows and columns are the lines. pg(s, 1, 1).
IncidenceStructure grid(std::size_t s);

/// W(q): points of PG(3,q), lines totally isotropic for
/// x1 y2 - x2 y1 + x3 y4 - x4 y3. pg(q, q, 1).
IncidenceStructure symplectic_gq(unsigned q);

/// Q^-(5,q): singular points and totally singular lines of an elliptic
/// quadric in PG(5,q). pg(q, q^2, 1). q in {2, 3}.
IncidenceStructure elliptic_quadric_gq(unsigned q);

/// T2*(O): points of AG(3,q), lines are affine lines whose direction lies on
/// the regular hyperoval {yz = x^2} + nucleus at infinity. pg(q-1, q+1, 1). q in {4, 8, 16}.
IncidenceStructure hyperoval_gq(unsigned q);

/// Swaps points and lines: point j of the dual is line j of `inc`, line p of
/// the dual is the set of lines through point p.
IncidenceStructure dual(const IncidenceStructure& inc);

/// num_lines x num_points matrix with N[j][p] = 1 iff point p is on line j.
BitMatrix incidence_matrix(const IncidenceStructure& inc);

/// Text format: optional '#' comment lines, then "<num_points> <num_lines>",
/// then one line per geometry line with strictly increasing 0-based indices.
/// Writes the canonical (lexicographically sorted) line order.
void save(const IncidenceStructure& inc, std::ostream& out);
void save(const IncidenceStructure& inc, const std::filesystem::path& path);

/// Throws ParseError (with 1-based line number) on malformed input.
IncidenceStructure load(std::istream& in);
IncidenceStructure load(const std::filesystem::path& path);

}  // namespace blrc
