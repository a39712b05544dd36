#include "blrc/bounds.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "blrc/error.hpp"
#include "blrc/geometry.hpp"
#include "blrc/small_field.hpp"

namespace blrc {

namespace {

using I = std::int64_t;

I as_int(std::size_t x) { return static_cast<I>(x); }

void check_ra(std::size_t r, std::size_t a) {
    if (r < 2 || a < 2) throw InvalidArgument("rate bounds need r >= 2 and a >= 2");
}

std::string decimal(const Rational& x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", boost::rational_cast<double>(x));
    return buf;
}

}  // namespace

Rational vartheta(std::size_t s, std::size_t t, std::size_t alpha) {
    make_pg_params(s, t, alpha);  // range checks
    const I S = as_int(s), T = as_int(t), A = as_int(alpha);
    return Rational(S * T * (S + 1) * (T + 1), A * (T + S + 1 - A));
}

Rational rate_lower(std::size_t r, std::size_t a) {
    check_ra(r, a);
    const I R = as_int(r), A = as_int(a);
    return Rational(R * R, (A + R - 1) * (R + 1));
}

std::optional<Rational> rate_upper(std::size_t r, std::size_t a) {
    check_ra(r, a);
    if ((r + a - 1) % 2 != 0) return std::nullopt;
    const I R = as_int(r), A = as_int(a);
    return Rational(A * (R * R - R + 1) - (R - 1) * (R - 1), (A + R - 1) * (R * (A - 1) + 1));
}

Rational rate_at_rank_bound(std::size_t s, std::size_t t, std::size_t alpha, bool upper) {
    const auto pg = make_pg_params(s, t, alpha);
    const Rational n(as_int(pg.num_points));
    const Rational rank = vartheta(s, t, alpha) + (upper ? 0 : 1);
    return (n - rank) / n;
}

std::vector<RateBounds> bounds_table(IntRange r_range, IntRange a_range) {
    if (r_range.lo > r_range.hi || a_range.lo > a_range.hi) throw InvalidArgument("empty range");
    std::vector<RateBounds> rows;
    for (auto r = r_range.lo; r <= r_range.hi; ++r) {
        for (auto a = a_range.lo; a <= a_range.hi; ++a) {
            rows.push_back({r, a, rate_lower(r, a), rate_upper(r, a), vartheta(r, a - 1, 1)});
        }
    }
    return rows;
}

std::string bounds_csv(const std::vector<RateBounds>& rows) {
    std::ostringstream out;
    out << "r,a,rate_lower,rate_upper,applicable,rate_lower_decimal,rate_upper_decimal\n";
    for (const auto& row : rows) {
        out << row.r << ',' << row.a << ',' << to_string(row.lower) << ','
            << (row.upper ? to_string(*row.upper) : "NA") << ',' << (row.upper ? "true" : "false") << ','
            << decimal(row.lower) << ',' << (row.upper ? decimal(*row.upper) : "NA") << '\n';
    }
    return out.str();
}

std::string_view to_string(RateEstimator e) noexcept {
    switch (e) {
        case RateEstimator::TheoremLowerBound: return "theorem-lower-bound";
        case RateEstimator::TheoremUpperBound: return "theorem-upper-bound";
        case RateEstimator::ExactRank: return "exact-rank";
    }
    return "unknown";
}

RateEstimator parse_estimator(std::string_view name) {
    for (auto e : {RateEstimator::TheoremLowerBound, RateEstimator::TheoremUpperBound, RateEstimator::ExactRank}) {
        if (to_string(e) == name) return e;
    }
    throw InvalidArgument("unknown estimator '" + std::string(name) +
                          "' (expected theorem-lower-bound, theorem-upper-bound or exact-rank)");
}

std::vector<CatalogEntry> Catalog::sporadic() const {
    std::vector<CatalogEntry> out;
    for (const auto& e : survivors) {
        if (e.a > 2) out.push_back(e);
    }
    return out;
}

namespace {

bool is_prime_power(std::size_t q) {
    if (q < 2) return false;
    std::size_t p = 2;
    while (q % p) ++p;
    while (q % p == 0) q /= p;
    return q == 1;
}

// Built-in construction for a GQ of order (s,t), if one exists.
std::optional<IncidenceStructure> construct_gq(std::size_t s, std::size_t t) {
    if (t == 1) return grid(s);
    if (s == 1) return dual(grid(t));
    if (s == t && SmallField::supported(static_cast<unsigned>(s))) return symplectic_gq(static_cast<unsigned>(s));
    for (unsigned q : {2u, 3u}) {
        if (s == q && t == q * q) return elliptic_quadric_gq(q);
        if (s == q * q && t == q) return dual(elliptic_quadric_gq(q));
    }
    for (unsigned q : {4u, 8u, 16u}) {
        if (s == q - 1 && t == q + 1) return hyperoval_gq(q);
        if (s == q + 1 && t == q - 1) return dual(hyperoval_gq(q));
    }
    return std::nullopt;
}

}  // namespace

Catalog catalog(const CatalogOptions& options) {
    Catalog out;
    out.options = options;

    struct Known {
        std::size_t s, t;
        std::string source;
    };
    std::vector<Known> known;
    for (auto [s, t] : std::initializer_list<std::pair<std::size_t, std::size_t>>{
             {2, 2}, {2, 4}, {3, 3}, {3, 9}, {3, 5}, {4, 4}, {4, 6}, {4, 8}, {4, 16}}) {
        known.push_back({s, t, "sporadic (" + std::to_string(s) + "," + std::to_string(t) + ")"});
    }
    // Families grow with their parameter; stop once even the smaller of a
    // pair and its dual has more than max_n points.
    auto small_enough = [&](std::size_t s, std::size_t t) { return 2 * (s * t + 1) <= options.max_n; };
    for (std::size_t z = 1; small_enough(1, z); ++z) known.push_back({1, z, "(1,z) z=" + std::to_string(z)});
    for (std::size_t q = 2; small_enough(q - 1, q + 1); ++q) {
        if (!is_prime_power(q)) continue;
        const auto tag = " q=" + std::to_string(q);
        if (small_enough(q - 1, q + 1)) known.push_back({q - 1, q + 1, "(q-1,q+1)" + tag});
        if (small_enough(q, q)) known.push_back({q, q, "(q,q)" + tag});
        if (small_enough(q, q * q)) known.push_back({q, q * q, "(q,q^2)" + tag});
        if (small_enough(q * q, q * q * q)) known.push_back({q * q, q * q * q, "(q^2,q^3)" + tag});
    }

    std::map<std::pair<std::size_t, std::size_t>, CatalogEntry> by_order;
    auto add = [&](std::size_t s, std::size_t t, bool from_dual, const std::string& source) {
        if (s < 2) return;  // s = 1 is replication, not an (r,a) BLRC
        if (by_order.count({s, t})) return;
        CatalogEntry e;
        e.s = s;
        e.t = t;
        e.r = s;
        e.a = t + 1;
        e.from_dual = from_dual;
        e.source = from_dual ? "dual of " + source : source;
        e.n = (s + 1) * (s * t + 1);
        by_order.emplace(std::pair{s, t}, std::move(e));
    };
    for (const auto& k : known) {
        add(k.s, k.t, false, k.source);
        add(k.t, k.s, true, k.source);
    }

    for (auto& [order, e] : by_order) {
        const auto upper = rate_upper(e.r, e.a);
        switch (options.estimator) {
            case RateEstimator::TheoremLowerBound:
                e.rate_estimate = rate_lower(e.r, e.a);
                e.estimator_used = "theorem-lower-bound";
                break;
            case RateEstimator::TheoremUpperBound:
                if (upper) {
                    e.rate_estimate = *upper;
                    e.estimator_used = "theorem-upper-bound";
                } else {
                    e.rate_estimate = rate_lower(e.r, e.a);
                    e.estimator_used = "theorem-lower-bound (upper not applicable)";
                }
                break;
            case RateEstimator::ExactRank: {
                std::optional<IncidenceStructure> inc;
                if (e.n <= options.max_n) inc = construct_gq(e.s, e.t);
                if (inc) {
                    const auto m = rank2(incidence_matrix(*inc));
                    e.rate_estimate = Rational(as_int(e.n - m), as_int(e.n));
                    e.estimator_used = "exact-rank";
                } else {
                    e.rate_estimate = upper ? *upper : rate_lower(e.r, e.a);
                    e.estimator_used = upper ? "theorem-upper-bound (no construction)"
                                             : "theorem-lower-bound (no construction)";
                }
                break;
            }
        }
        e.passes_filter = e.n <= options.max_n && e.rate_estimate > options.min_rate;
        out.candidates.push_back(e);
    }
    for (const auto& e : out.candidates) {
        if (e.passes_filter) out.survivors.push_back(e);
    }
    std::sort(out.survivors.begin(), out.survivors.end(),
              [](const CatalogEntry& x, const CatalogEntry& y) { return std::pair{x.r, x.a} < std::pair{y.r, y.a}; });
    for (const auto& e : out.survivors) {
        if (e.a != 2) continue;
        if (!out.grid_family) {
            out.grid_family = IntRange{e.r, e.r};
        } else {
            out.grid_family->lo = std::min(out.grid_family->lo, e.r);
            out.grid_family->hi = std::max(out.grid_family->hi, e.r);
        }
    }
    return out;
}

}  // namespace blrc
