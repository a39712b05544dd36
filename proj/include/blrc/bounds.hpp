#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blrc/code.hpp"

namespace blrc {

/// st(s+1)(t+1) / (alpha (s+t+1-alpha)), the rank bound of a pg incidence matrix.
/// Throws InvalidArgument outside 1 <= alpha <= min(s+1, t+1), s, t >= 1.
Rational vartheta(std::size_t s, std::size_t t, std::size_t alpha);

/// r^2 / ((a+r-1)(r+1)). Requires r >= 2, a >= 2.
Rational rate_lower(std::size_t r, std::size_t a);

/// (a(r^2-r+1) - (r-1)^2) / ((a+r-1)(r(a-1)+1)) when r+a-1 is even, nullopt otherwise.
std::optional<Rational> rate_upper(std::size_t r, std::size_t a);

/// Rate when rank(N) = vartheta + 1 (lower) or vartheta (upper), for general alpha.
/// The upper value is only a bound when s+t+1-alpha is even.
Rational rate_at_rank_bound(std::size_t s, std::size_t t, std::size_t alpha, bool upper);

struct RateBounds {
    std::size_t r = 0;
    std::size_t a = 0;
    Rational lower;
    std::optional<Rational> upper;
    /// vartheta(r, a-1, 1).
    Rational vartheta;
};

struct IntRange {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

/// Rows ordered by r, then a. Throws InvalidArgument on empty ranges.
std::vector<RateBounds> bounds_table(IntRange r_range, IntRange a_range);

/// CSV: r,a,rate_lower,rate_upper,applicable,rate_lower_decimal,rate_upper_decimal.
std::string bounds_csv(const std::vector<RateBounds>& rows);

enum class RateEstimator { TheoremLowerBound, TheoremUpperBound, ExactRank };

std::string_view to_string(RateEstimator e) noexcept;
/// Accepts "theorem-lower-bound", "theorem-upper-bound", "exact-rank".
RateEstimator parse_estimator(std::string_view name);

struct CatalogEntry {
    std::size_t r = 0;
    std::size_t a = 0;
    std::size_t s = 0;
    std::size_t t = 0;
    bool from_dual = false;
    /// Known family or sporadic source, e.g. "(q,q) q=3".
    std::string source;
    std::size_t n = 0;
    Rational rate_estimate;
    /// Which value produced rate_estimate, e.g. "theorem-upper-bound" or
    /// "theorem-lower-bound (upper not applicable)".
    std::string estimator_used;
    bool passes_filter = false;
};

struct CatalogOptions {
    std::size_t max_n = 100;
    Rational min_rate = Rational(1, 3);
    RateEstimator estimator = RateEstimator::TheoremUpperBound;
};

struct Catalog {
    CatalogOptions options;
    /// Every known GQ (s,t) with s > 1 and its dual, deduplicated by (s,t).
    std::vector<CatalogEntry> candidates;
    /// Surviving (r,a) pairs, deduplicated, ordered by r then a. Grid entries
    /// (a = 2) are kept here individually.
    std::vector<CatalogEntry> survivors;
    /// Range of r for surviving (r,2) grid entries, if any.
    std::optional<IntRange> grid_family;
    /// Survivors with a > 2.
    std::vector<CatalogEntry> sporadic() const;
};

/// Enumerates the known generalized quadrangles and their duals, keeps
/// n <= max_n and estimated rate > min_rate.
Catalog catalog(const CatalogOptions& options = {});

}  // namespace blrc
