#include "blrc/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "blrc/error.hpp"
#include "blrc/small_field.hpp"

namespace blrc {

IncidenceStructure::IncidenceStructure(std::size_t num_points, std::vector<PointSet> lines, std::string label)
    : num_points_(num_points), lines_(std::move(lines)), label_(std::move(label)) {
    for (std::size_t j = 0; j < lines_.size(); ++j) {
        auto& line = lines_[j];
        std::sort(line.begin(), line.end());
        if (std::adjacent_find(line.begin(), line.end()) != line.end()) {
            throw ValidationError(ValidationError::Kind::Structure,
                                  "line " + std::to_string(j) + " repeats a point");
        }
        if (!line.empty() && line.back() >= num_points_) {
            throw ValidationError(ValidationError::Kind::Structure,
                                  "line " + std::to_string(j) + " references point " + std::to_string(line.back()) +
                                      " but there are only " + std::to_string(num_points_) + " points");
        }
    }
    std::vector<const PointSet*> sorted;
    sorted.reserve(lines_.size());
    for (const auto& line : lines_) sorted.push_back(&line);
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a < *b; });
    auto dup = std::adjacent_find(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a == *b; });
    if (dup != sorted.end()) {
        throw ValidationError(ValidationError::Kind::Structure, "duplicate line");
    }
}

std::vector<std::vector<std::size_t>> IncidenceStructure::lines_through_points() const {
    std::vector<std::vector<std::size_t>> through(num_points_);
    for (std::size_t j = 0; j < lines_.size(); ++j) {
        for (auto p : lines_[j]) through[p].push_back(j);
    }
    return through;
}

IncidenceStructure IncidenceStructure::canonical() const {
    auto lines = lines_;
    std::sort(lines.begin(), lines.end());
    return IncidenceStructure(num_points_, std::move(lines), label_);
}

std::string_view to_string(PgClass c) noexcept {
    switch (c) {
        case PgClass::Steiner2Design: return "steiner-2-design";
        case PgClass::Net: return "net";
        case PgClass::GeneralizedQuadrangle: return "generalized-quadrangle";
        case PgClass::Proper: return "proper";
    }
    return "unknown";
}

PgParams make_pg_params(std::size_t s, std::size_t t, std::size_t alpha) {
    if (s < 1 || t < 1) throw InvalidArgument("partial geometry needs s >= 1 and t >= 1");
    if (alpha < 1 || alpha > std::min(s + 1, t + 1)) {
        throw InvalidArgument("alpha must satisfy 1 <= alpha <= min(s+1, t+1)");
    }
    const std::size_t base = s * t + alpha;
    if (((s + 1) * base) % alpha || ((t + 1) * base) % alpha) {
        throw InvalidArgument("point/line counts are not integral for these parameters");
    }
    PgParams pg;
    pg.s = s;
    pg.t = t;
    pg.alpha = alpha;
    pg.num_points = (s + 1) * base / alpha;
    pg.num_lines = (t + 1) * base / alpha;
    if (alpha == 1) {
        pg.pg_class = PgClass::GeneralizedQuadrangle;
    } else if (alpha == s + 1 || alpha == t + 1) {
        pg.pg_class = PgClass::Steiner2Design;
    } else if (alpha == s || alpha == t) {
        pg.pg_class = PgClass::Net;
    } else {
        pg.pg_class = PgClass::Proper;
    }
    pg.grid_degenerate = alpha == 1 && (s == 1 || t == 1);
    return pg;
}

PgParams validate_pg(const IncidenceStructure& inc) {
    using Kind = ValidationError::Kind;
    const auto n = inc.num_points();
    const auto b = inc.num_lines();
    if (b == 0 || n == 0) throw ValidationError(Kind::Degenerate, "empty incidence structure");

    const std::size_t line_size = inc.line(0).size();
    for (std::size_t j = 1; j < b; ++j) {
        if (inc.line(j).size() != line_size) {
            throw ValidationError(Kind::LineSize, "non-uniform line size: line 0 has " + std::to_string(line_size) +
                                                      " points, line " + std::to_string(j) + " has " +
                                                      std::to_string(inc.line(j).size()));
        }
    }
    if (line_size < 2) throw ValidationError(Kind::Degenerate, "lines need at least 2 points (s >= 1)");

    const auto through = inc.lines_through_points();
    for (std::size_t p = 0; p < n; ++p) {
        if (through[p].empty()) {
            throw ValidationError(Kind::IsolatedPoint, "point " + std::to_string(p) + " lies on no line");
        }
    }
    const std::size_t degree = through[0].size();
    for (std::size_t p = 1; p < n; ++p) {
        if (through[p].size() != degree) {
            throw ValidationError(Kind::PointDegree, "non-uniform point degree: point 0 is on " +
                                                         std::to_string(degree) + " lines, point " +
                                                         std::to_string(p) + " is on " +
                                                         std::to_string(through[p].size()));
        }
    }
    if (degree < 2) throw ValidationError(Kind::Degenerate, "points need at least 2 lines (t >= 1)");

    // Any two lines meet in at most one point.
    std::vector<std::size_t> meet(b, 0);
    for (std::size_t j = 0; j < b; ++j) {
        std::fill(meet.begin() + static_cast<std::ptrdiff_t>(j), meet.end(), 0);
        for (auto p : inc.line(j)) {
            for (auto other : through[p]) {
                if (other > j && ++meet[other] >= 2) {
                    throw ValidationError(Kind::LinesMeetTwice, "lines " + std::to_string(j) + " and " +
                                                                    std::to_string(other) +
                                                                    " share two or more points");
                }
            }
        }
    }

    std::vector<BitVector> collinear(n, BitVector(n));
    for (const auto& line : inc.lines()) {
        for (auto p : line) {
            for (auto q : line) {
                if (p != q) collinear[p].set(q);
            }
        }
    }

    // Axiom 4: every non-incident (P, B) has the same number of points of B collinear with P.
    bool have_alpha = false;
    std::size_t alpha = 0;
    std::vector<bool> on_line(n, false);
    for (std::size_t j = 0; j < b; ++j) {
        for (auto p : inc.line(j)) on_line[p] = true;
        for (std::size_t p = 0; p < n; ++p) {
            if (on_line[p]) continue;
            std::size_t count = 0;
            for (auto q : inc.line(j)) count += collinear[p].get(q);
            if (!have_alpha) {
                alpha = count;
                have_alpha = true;
                if (alpha == 0) {
                    throw ValidationError(Kind::Alpha, "point " + std::to_string(p) +
                                                           " is collinear with no point of line " + std::to_string(j));
                }
            } else if (count != alpha) {
                throw ValidationError(Kind::Alpha, "non-uniform alpha: point " + std::to_string(p) + " and line " +
                                                       std::to_string(j) + " have " + std::to_string(count) +
                                                       " connecting pairs, expected " + std::to_string(alpha));
            }
        }
        for (auto p : inc.line(j)) on_line[p] = false;
    }
    if (!have_alpha) throw ValidationError(Kind::Degenerate, "every point is on every line; alpha is undefined");

    PgParams pg;
    try {
        pg = make_pg_params(line_size - 1, degree - 1, alpha);
    } catch (const InvalidArgument& e) {
        throw ValidationError(Kind::Cardinality, e.what());
    }
    if (pg.num_points != n || pg.num_lines != b) {
        throw ValidationError(Kind::Cardinality, "counts " + std::to_string(n) + " points / " + std::to_string(b) +
                                                     " lines disagree with pg(" + std::to_string(pg.s) + "," +
                                                     std::to_string(pg.t) + "," + std::to_string(pg.alpha) +
                                                     ") which needs " + std::to_string(pg.num_points) + " / " +
                                                     std::to_string(pg.num_lines));
    }
    return pg;
}

IncidenceStructure grid(std::size_t s) {
    if (s < 1) throw InvalidArgument("grid needs s >= 1");
    const std::size_t side = s + 1;
    std::vector<PointSet> lines;
    for (std::size_t r = 0; r < side; ++r) {
        PointSet row, col;
        for (std::size_t c = 0; c < side; ++c) {
            row.push_back(r * side + c);
            col.push_back(c * side + r);
        }
        lines.push_back(std::move(row));
        lines.push_back(std::move(col));
    }
    std::sort(lines.begin(), lines.end());
    return IncidenceStructure(side * side, std::move(lines), "grid(" + std::to_string(s) + ")");
}

namespace {

using Element = SmallField::Element;
using Coords = std::vector<Element>;

// Points of PG(dim-1, q) as normalized vectors (first nonzero entry 1), in
// lexicographic order of coordinates.
class ProjectiveSpace {
public:
    ProjectiveSpace(const SmallField& field, std::size_t dim) : field_(field), dim_(dim) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < dim; ++i) total *= field.order();
        index_.assign(total, kNone);
        Coords v(dim, 0);
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t x = code;
            for (std::size_t i = dim; i-- > 0; x /= field.order()) v[i] = static_cast<Element>(x % field.order());
            const auto lead = std::find_if(v.begin(), v.end(), [](Element e) { return e != 0; });
            if (lead != v.end() && *lead == 1) {
                index_[code] = points_.size();
                points_.push_back(v);
            }
        }
    }

    std::size_t size() const noexcept { return points_.size(); }
    const Coords& point(std::size_t i) const noexcept { return points_[i]; }

    std::size_t index_of(Coords v) const {
        const auto lead = std::find_if(v.begin(), v.end(), [](Element e) { return e != 0; });
        const Element scale = field_.inv(*lead);
        std::size_t code = 0;
        for (auto& e : v) {
            e = field_.mul(e, scale);
            code = code * field_.order() + e;
        }
        return index_[code];
    }

    // All q+1 points on the line through points a and b.
    PointSet line_through(std::size_t a, std::size_t b) const {
        PointSet line{a};
        Coords v(dim_);
        for (unsigned lambda = 0; lambda < field_.order(); ++lambda) {
            for (std::size_t i = 0; i < dim_; ++i) {
                v[i] = field_.add(field_.mul(static_cast<Element>(lambda), points_[a][i]), points_[b][i]);
            }
            line.push_back(index_of(v));
        }
        std::sort(line.begin(), line.end());
        return line;
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    const SmallField& field_;
    std::size_t dim_;
    std::vector<Coords> points_;
    std::vector<std::size_t> index_;
};

// Lines of a polar space: `on_space` selects the points, `perp` tells whether
// two selected points span a line fully contained in the space.
template <class OnSpace, class Perp>
IncidenceStructure polar_space(const ProjectiveSpace& space, OnSpace on_space, Perp perp, std::string label) {
    std::vector<std::size_t> relabel(space.size(), static_cast<std::size_t>(-1));
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (on_space(space.point(i))) {
            relabel[i] = members.size();
            members.push_back(i);
        }
    }
    const std::size_t n = members.size();
    std::vector<BitVector> covered(n, BitVector(n));
    std::vector<PointSet> lines;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (covered[a].get(b) || !perp(space.point(members[a]), space.point(members[b]))) continue;
            PointSet line;
            for (auto p : space.line_through(members[a], members[b])) {
                if (relabel[p] == static_cast<std::size_t>(-1)) {
                    throw Error("internal: polar line leaves the point set");
                }
                line.push_back(relabel[p]);
            }
            for (auto x : line) {
                for (auto y : line) {
                    if (x != y) covered[x].set(y);
                }
            }
            lines.push_back(std::move(line));
        }
    }
    std::sort(lines.begin(), lines.end());
    return IncidenceStructure(n, std::move(lines), std::move(label));
}

}  // namespace

IncidenceStructure symplectic_gq(unsigned q) {
    const SmallField f(q);
    const ProjectiveSpace space(f, 4);
    auto form = [&f](const Coords& x, const Coords& y) {
        const Element a = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
        const Element b = f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2]));
        return f.add(a, b);
    };
    return polar_space(
        space, [](const Coords&) { return true; }, [&](const Coords& x, const Coords& y) { return form(x, y) == 0; },
        "W(" + std::to_string(q) + ")");
}

IncidenceStructure elliptic_quadric_gq(unsigned q) {
    if (q != 2 && q != 3) throw InvalidArgument("elliptic_quadric_gq supports q in {2, 3}");
    const SmallField f(q);
    const ProjectiveSpace space(f, 6);
    // x^2 + x + d is irreducible over GF(q): d = 1 for q = 2, d = 2 for q = 3.
    const Element d = q == 2 ? 1 : 2;
    auto quad = [&](const Coords& x) {
        Element v = f.add(f.mul(x[0], x[1]), f.mul(x[2], x[3]));
        v = f.add(v, f.mul(x[4], x[4]));
        v = f.add(v, f.mul(x[4], x[5]));
        return f.add(v, f.mul(d, f.mul(x[5], x[5])));
    };
    auto polar = [&](const Coords& x, const Coords& y) {
        Coords sum(6);
        for (std::size_t i = 0; i < 6; ++i) sum[i] = f.add(x[i], y[i]);
        return f.sub(f.sub(quad(sum), quad(x)), quad(y));
    };
    return polar_space(
        space, [&](const Coords& x) { return quad(x) == 0; },
        [&](const Coords& x, const Coords& y) { return polar(x, y) == 0; }, "Q-(5," + std::to_string(q) + ")");
}

IncidenceStructure hyperoval_gq(unsigned q) {
    if (q != 4 && q != 8 && q != 16) throw InvalidArgument("hyperoval_gq supports q in {4, 8, 16}");
    const SmallField f(q);
    // Regular hyperoval in the plane at infinity: conic yz = x^2 plus its nucleus (1:0:0).
    std::vector<std::array<Element, 3>> directions;
    for (unsigned t = 0; t < q; ++t) {
        const auto e = static_cast<Element>(t);
        directions.push_back({e, f.mul(e, e), 1});
    }
    directions.push_back({0, 1, 0});
    directions.push_back({1, 0, 0});

    const std::size_t n = std::size_t{q} * q * q;
    auto index = [q](const std::array<Element, 3>& p) { return (std::size_t{p[0]} * q + p[1]) * q + p[2]; };
    std::vector<PointSet> lines;
    std::vector<bool> used(n);
    for (const auto& dir : directions) {
        std::fill(used.begin(), used.end(), false);
        for (std::size_t code = 0; code < n; ++code) {
            if (used[code]) continue;
            const std::array<Element, 3> base{static_cast<Element>(code / (q * q)),
                                              static_cast<Element>((code / q) % q), static_cast<Element>(code % q)};
            PointSet line;
            for (unsigned lambda = 0; lambda < q; ++lambda) {
                std::array<Element, 3> p{};
                for (std::size_t i = 0; i < 3; ++i) {
                    p[i] = f.add(base[i], f.mul(static_cast<Element>(lambda), dir[i]));
                }
                used[index(p)] = true;
                line.push_back(index(p));
            }
            std::sort(line.begin(), line.end());
            lines.push_back(std::move(line));
        }
    }
    std::sort(lines.begin(), lines.end());
    return IncidenceStructure(n, std::move(lines), "T2*(O," + std::to_string(q) + ")");
}

IncidenceStructure dual(const IncidenceStructure& inc) {
    auto through = inc.lines_through_points();
    std::string label = inc.label().empty() ? std::string{} : "dual(" + inc.label() + ")";
    return IncidenceStructure(inc.num_lines(), std::move(through), std::move(label));
}

BitMatrix incidence_matrix(const IncidenceStructure& inc) {
    BitMatrix m(inc.num_lines(), inc.num_points());
    for (std::size_t j = 0; j < inc.num_lines(); ++j) {
        for (auto p : inc.line(j)) m.set(j, p);
    }
    return m;
}

void save(const IncidenceStructure& inc, std::ostream& out) {
    const auto canon = inc.canonical();
    if (!canon.label().empty()) out << "# " << canon.label() << '\n';
    out << canon.num_points() << ' ' << canon.num_lines() << '\n';
    for (const auto& line : canon.lines()) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) out << ' ';
            out << line[i];
        }
        out << '\n';
    }
}

void save(const IncidenceStructure& inc, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    save(inc, out);
    if (!out) throw IoError("write failed for " + path.string());
}

namespace {

std::vector<std::size_t> parse_numbers(std::string_view text, std::size_t line_no) {
    std::vector<std::size_t> values;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
        if (pos == text.size()) break;
        std::size_t value = 0;
        const auto* first = text.data() + pos;
        const auto* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || (ptr != last && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
            throw ParseError(line_no, "expected a non-negative integer");
        }
        values.push_back(value);
        pos = static_cast<std::size_t>(ptr - text.data());
    }
    return values;
}

}  // namespace

IncidenceStructure load(std::istream& in) {
    std::string text;
    std::string label;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t num_points = 0, num_lines = 0;
    std::vector<PointSet> lines;

    while (std::getline(in, text)) {
        ++line_no;
        const auto first = text.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (text[first] == '#') {
            if (!have_header && label.empty()) {
                const auto start = text.find_first_not_of(" \t", first + 1);
                if (start != std::string::npos) label = text.substr(start);
                while (!label.empty() && label.back() == '\r') label.pop_back();
            }
            continue;
        }
        auto values = parse_numbers(text, line_no);
        if (!have_header) {
            if (values.size() != 2) throw ParseError(line_no, "header must be '<num_points> <num_lines>'");
            num_points = values[0];
            num_lines = values[1];
            have_header = true;
            continue;
        }
        if (lines.size() == num_lines) throw ParseError(line_no, "more lines than declared in the header");
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] >= num_points) {
                throw ParseError(line_no, "point index " + std::to_string(values[i]) + " out of range (" +
                                              std::to_string(num_points) + " points)");
            }
            if (i && values[i] <= values[i - 1]) throw ParseError(line_no, "point indices must be strictly increasing");
        }
        if (values.empty()) throw ParseError(line_no, "empty line");
        lines.push_back(std::move(values));
    }
    if (!have_header) throw ParseError(line_no, "missing header");
    if (lines.size() != num_lines) {
        throw ParseError(line_no, "declared " + std::to_string(num_lines) + " lines but found " +
                                      std::to_string(lines.size()));
    }
    try {
        return IncidenceStructure(num_points, std::move(lines), std::move(label));
    } catch (const ValidationError& e) {
        throw ParseError(0, e.what());
    }
}

IncidenceStructure load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return load(in);
}

}  // namespace blrc
