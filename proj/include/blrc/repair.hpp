#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "blrc/bit_matrix.hpp"
#include "blrc/code.hpp"

namespace blrc {

/// Geometric mode uses only the lines of the geometry (the designed r and a);
/// exhaustive mode searches the whole dual code.
enum class MetricMode { Geometric, Exhaustive };

std::string_view to_string(MetricMode mode) noexcept;

/// A dual codeword used to repair one symbol.
struct RepairVector {
    BitVector v;
    std::vector<std::size_t> support;
    /// Index of the geometry line with this support, if there is one.
    std::optional<std::size_t> line;

    std::size_t weight() const noexcept { return support.size(); }
};

/// Work limit for exhaustive searches: number of candidate supports examined per coordinate.
inline constexpr double kDefaultSearchGuard = 1e8;

/// The t+1 rows of N through coordinate i, in line order.
std::vector<RepairVector> line_repair_sets(const BlrcCode& code, std::size_t i);

/// Every dual codeword v with v(i) = 1 and weight <= r+1, found by
/// enumerating supports containing i and testing G v^T = 0.
/// Sorted by weight, then line index (lines first), then support.
/// Throws GuardExceeded when sum_{w <= r+1} binomial(n-1, w-1) > guard.
std::vector<RepairVector> omega_r(const BlrcCode& code, std::size_t i, std::size_t r,
                                  double guard = kDefaultSearchGuard);

/// omega_r in exhaustive mode, the lines of weight <= r+1 in geometric mode.
std::vector<RepairVector> repair_alternatives(const BlrcCode& code, std::size_t i, std::size_t r, MetricMode mode,
                                              double guard = kDefaultSearchGuard);

/// r(i): minimum weight - 1 over dual codewords covering i.
std::size_t repair_degree(const BlrcCode& code, std::size_t i, MetricMode mode,
                          double guard = kDefaultSearchGuard);
std::size_t overall_repair_degree(const BlrcCode& code, MetricMode mode, double guard = kDefaultSearchGuard);

/// a(i) = |Omega_r(i)|.
std::size_t alternativity(const BlrcCode& code, std::size_t i, std::size_t r, MetricMode mode,
                          double guard = kDefaultSearchGuard);
std::size_t overall_alternativity(const BlrcCode& code, std::size_t r, MetricMode mode,
                                  double guard = kDefaultSearchGuard);

struct Tolerance {
    std::size_t delta = 0;
    /// A minimum set of other coordinates meeting every repair support.
    std::vector<std::size_t> blocking_set;
};

/// delta(i) as the minimum hitting set of {supp(v) \ {i}} over the given alternatives.
Tolerance tolerance_from(std::span<const RepairVector> alternatives, std::size_t i);

Tolerance tolerance(const BlrcCode& code, std::size_t i, std::size_t r, MetricMode mode,
                    double guard = kDefaultSearchGuard);
std::size_t overall_tolerance(const BlrcCode& code, std::size_t r, MetricMode mode,
                              double guard = kDefaultSearchGuard);

struct SymbolProfile {
    std::size_t r = 0;
    std::size_t a = 0;
    std::size_t delta = 0;
    std::vector<std::size_t> blocking_set;
    /// supp(v) \ {i} for each v in Omega_r(i), in preference order.
    std::vector<std::vector<std::size_t>> repair_sets;
};

struct RepairProfile {
    MetricMode mode = MetricMode::Geometric;
    /// The r used to form Omega_r(i).
    std::size_t r_bound = 0;
    std::vector<SymbolProfile> symbols;
    std::size_t r = 0;      // max r(i)
    std::size_t a = 0;      // min a(i)
    std::size_t delta = 0;  // min delta(i)
    bool balanced = false;
};

/// Per-symbol and overall metrics. Omega_r uses `r` if given, otherwise the
/// overall repair degree measured in the same mode. Coordinates are processed
/// in parallel; the result does not depend on scheduling.
RepairProfile repair_profile(const BlrcCode& code, MetricMode mode, std::optional<std::size_t> r = std::nullopt,
                             double guard = kDefaultSearchGuard);

/// True iff delta(i) is the same for every coordinate.
bool is_balanced(const RepairProfile& profile);

struct RepairResult {
    std::uint8_t value = 0;
    /// Position of the chosen vector in the alternative list.
    std::size_t alternative = 0;
    RepairVector used;
    std::size_t retrieved = 0;
};

using Received = std::vector<std::optional<std::uint8_t>>;

/// Repairs symbol i from the first alternative whose other coordinates are all
/// present and available. `received[j]` empty means erased. Symbol i must be
/// erased or listed as unavailable (InvalidArgument otherwise).
/// Throws RepairError("not locally repairable under this availability").
RepairResult repair_symbol(std::span<const RepairVector> alternatives, const Received& received, std::size_t i,
                           std::span<const std::size_t> unavailable);

RepairResult repair_symbol(const BlrcCode& code, const Received& received, std::size_t i,
                           std::span<const std::size_t> unavailable, MetricMode mode = MetricMode::Geometric,
                           std::optional<std::size_t> r = std::nullopt, double guard = kDefaultSearchGuard);

struct IidUnavailability {
    double p = 0.0;
};
struct AdversarialUnavailability {
    std::size_t u = 0;
};
using AvailabilityModel = std::variant<IidUnavailability, AdversarialUnavailability>;

struct SimulationOptions {
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    MetricMode mode = MetricMode::Geometric;
    std::optional<std::size_t> r;
    double guard = kDefaultSearchGuard;
    /// Adversarial model enumerates every unavailable set when
    /// n * binomial(n-1, u) is at most this; otherwise samples `trials` sets per symbol.
    double exhaustive_limit = 1e6;
};

struct SimulationReport {
    std::string model;  // "iid" or "adversarial"
    double p = 0.0;
    std::size_t u = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    bool exhaustive = false;
    std::size_t r_bound = 0;
    /// Fraction of (trial or unavailable set) cases in which symbol i was locally repairable.
    std::vector<double> per_symbol_success;
    double success_fraction = 0.0;
    /// iid: fraction of trials in which every symbol was repairable.
    /// adversarial: fraction of symbols repairable under every examined set.
    double all_symbols_fraction = 0.0;
    double mean_retrieved = 0.0;
    std::size_t cases = 0;
    std::size_t failures = 0;
    /// First failing (symbol, unavailable set), if any.
    std::optional<std::pair<std::size_t, std::vector<std::size_t>>> failure_witness;
};

/// Local repairability under node unavailability. Draws depend only on
/// (seed, trial index), so results are reproducible bit for bit.
SimulationReport simulate_availability(const BlrcCode& code, const AvailabilityModel& model,
                                       const SimulationOptions& options = {});

}  // namespace blrc
