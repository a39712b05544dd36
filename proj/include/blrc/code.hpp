#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blrc/bit_matrix.hpp"
#include "blrc/geometry.hpp"

namespace blrc {

using Rational = boost::rational<std::int64_t>;

/// Binary linear code whose parity checks are the lines of a partial geometry.
///
/// Coordinates are the geometry's points. H holds rank2(N) independent rows of
/// the incidence matrix N; G is systematic on `info_set` (G restricted to those
/// columns is the identity).
class BlrcCode {
public:
    std::size_t n() const noexcept { return incidence_.cols(); }
    std::size_t k() const noexcept { return generator_.rows(); }
    /// Number of independent parity checks, rank2(N).
    std::size_t m() const noexcept { return parity_check_.rows(); }

    const BitMatrix& parity_check() const noexcept { return parity_check_; }
    const BitMatrix& generator() const noexcept { return generator_; }
    const BitMatrix& incidence() const noexcept { return incidence_; }
    /// Rows of N kept in H, ascending.
    const std::vector<std::size_t>& parity_rows() const noexcept { return parity_rows_; }
    const std::vector<std::size_t>& info_set() const noexcept { return info_set_; }
    const IncidenceStructure& geometry() const noexcept { return geometry_; }
    const PgParams& pg() const noexcept { return pg_; }

private:
    friend BlrcCode build_code(const IncidenceStructure& inc);

    IncidenceStructure geometry_;
    PgParams pg_;
    BitMatrix incidence_;
    BitMatrix parity_check_;
    BitMatrix generator_;
    std::vector<std::size_t> parity_rows_;
    std::vector<std::size_t> info_set_;
};

/// Validates the geometry and builds its code.
///
/// H keeps the rows of N, scanned in order, that raise the rank. The
/// information set is the set of non-pivot columns of rref(H); the rows of
/// G put a 1 on their information coordinate and copy the matching column of
/// rref(H) onto the pivot coordinates.
///
/// Throws ValidationError if the geometry is invalid, InvalidArgument if
/// k = 0 or if some coordinate is forced to zero (an all-zero row in the
/// non-pivot part of rref(H)).
BlrcCode build_code(const IncidenceStructure& inc);

/// c = o G. Throws InvalidArgument if the message length is not k.
BitVector encode(const BlrcCode& code, const BitVector& message);
std::vector<std::uint8_t> encode(const BlrcCode& code, std::span<const std::uint8_t> message);

/// Recovers o from the k symbols c_I. Throws InvalidArgument
/// ("not an information set") when G_I is singular, or on size mismatch.
BitVector reconstruct(const BlrcCode& code, std::span<const std::size_t> coords, const BitVector& values);
std::vector<std::uint8_t> reconstruct(const BlrcCode& code, std::span<const std::size_t> coords,
                                      std::span<const std::uint8_t> values);

bool is_information_set(const BlrcCode& code, std::span<const std::size_t> coords);

inline constexpr double kDefaultMdsGuard = 1e7;

/// First k-subset (colex order) that is not an information set, if any.
/// Throws GuardExceeded when binomial(n, k) > guard.
std::optional<std::vector<std::size_t>> find_non_information_set(const BlrcCode& code,
                                                                 double guard = kDefaultMdsGuard);

/// True iff every k-subset is an information set.
bool is_mds(const BlrcCode& code, double guard = kDefaultMdsGuard);

struct CodeRate {
    Rational rate;       // k / n
    Rational footprint;  // n / k
};

CodeRate rate(const BlrcCode& code);

/// binomial(n, k) as a double (saturates at +inf for huge values).
double binomial(std::size_t n, std::size_t k);

/// "p/q" rendering.
std::string to_string(const Rational& r);

}  // namespace blrc
