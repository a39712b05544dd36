#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "blrc/bounds.hpp"
#include "blrc/code.hpp"
#include "blrc/geometry.hpp"
#include "blrc/repair.hpp"

namespace blrc {

/// Bumped whenever a field is renamed or removed from a JSON document.
inline constexpr int kSchemaVersion = 1;

/// Checks of a measured code against the designed guarantees.
struct Conformance {
    bool applicable = false;  // s > 1; the guarantees are stated for that case only
    bool repair_bounds = false;       // r <= s and a >= t+1
    bool tolerance_bound = false;     // delta(i) >= t+1 for all i
    bool rate_within_bounds = false;  // rate within the (r,a) = (s,t+1) bounds
    Rational rate_lower;
    std::optional<Rational> rate_upper;
    Rational vartheta;
    bool rank_parity_even = false;  // s+t+1-alpha even
    bool rank_sandwich = false;     // vartheta <= m <= vartheta+1 (or m <= vartheta+1 for odd parity)
};

Conformance check_conformance(const BlrcCode& code, const RepairProfile& profile);

nlohmann::json to_json(const PgParams& pg);
/// n, k, info_set, H and G as hex-packed rows (see BitVector::to_hex).
nlohmann::json code_to_json(const BlrcCode& code);
nlohmann::json profile_to_json(const RepairProfile& profile);
/// Full analysis document: code summary, rate, profile and conformance.
nlohmann::json analysis_json(const BlrcCode& code, const RepairProfile& profile);
/// i,r,a,delta per coordinate.
std::string profile_csv(const RepairProfile& profile);

nlohmann::json simulation_json(const SimulationReport& report);
/// One row per symbol plus a final "all" row.
std::string simulation_csv(const SimulationReport& report);

nlohmann::json bounds_json(const std::vector<RateBounds>& rows);
nlohmann::json catalog_json(const Catalog& catalog);
std::string catalog_csv(const Catalog& catalog);

}  // namespace blrc
