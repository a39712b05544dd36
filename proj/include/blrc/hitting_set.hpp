#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace blrc {

/// Exact minimum hitting set by branch and bound.
///
/// Returns a minimum-size set of elements (ascending) meeting every input
/// set, or nullopt if some input set is empty. An empty family gives an empty
/// hitting set. The result is deterministic for a given input order.
std::optional<std::vector<std::size_t>> minimum_hitting_set(std::span<const std::vector<std::size_t>> sets);

}  // namespace blrc
