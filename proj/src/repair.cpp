#include "blrc/repair.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <limits>
#include <random>
#include <thread>

#include "blrc/error.hpp"
#include "blrc/hitting_set.hpp"

namespace blrc {

std::string_view to_string(MetricMode mode) noexcept {
    return mode == MetricMode::Geometric ? "geometric" : "exhaustive";
}

namespace {

void check_coordinate(const BlrcCode& code, std::size_t i) {
    if (i >= code.n()) {
        throw InvalidArgument("coordinate " + std::to_string(i) + " out of range (n = " + std::to_string(code.n()) +
                              ")");
    }
}

// Runs fn(i) for i in [0, count) on a small worker pool. Exceptions propagate.
template <class Fn>
void parallel_for(std::size_t count, Fn fn) {
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(hw, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::vector<std::future<void>> pending;
    for (std::size_t w = 0; w < workers; ++w) {
        pending.push_back(std::async(std::launch::async, [&] {
            try {
                for (std::size_t i = next++; i < count && !failed; i = next++) fn(i);
            } catch (...) {
                failed = true;
                throw;
            }
        }));
    }
    for (auto& f : pending) f.wait();
    for (auto& f : pending) f.get();
}

double candidate_count(std::size_t n, std::size_t max_weight) {
    double total = 0.0;
    for (std::size_t w = 1; w <= max_weight && w <= n; ++w) total += binomial(n - 1, w - 1);
    return total;
}

// Enumerates supports S containing `target` with |S| = weight and XOR of the
// generator columns over S equal to zero, i.e. dual codewords of that weight.
class DualSearch {
public:
    explicit DualSearch(const BlrcCode& code) : n_(code.n()) {
        const auto gt = code.generator().transpose();
        columns_.reserve(n_);
        for (std::size_t c = 0; c < n_; ++c) columns_.push_back(gt.row(c));
    }

    // visit(support) returns false to stop. Returns false if stopped early.
    template <class Visit>
    bool run(std::size_t target, std::size_t weight, Visit&& visit) const {
        if (weight == 0 || weight > n_) return true;
        std::vector<BitVector> acc(weight, BitVector(columns_[target].size()));
        acc[0] = columns_[target];
        std::vector<std::size_t> others(weight - 1);
        return descend(target, weight, 0, 0, acc, others, visit);
    }

private:
    template <class Visit>
    bool descend(std::size_t target, std::size_t weight, std::size_t depth, std::size_t start,
                 std::vector<BitVector>& acc, std::vector<std::size_t>& others, Visit& visit) const {
        if (depth + 1 == weight) {
            if (!acc[depth].none()) return true;
            std::vector<std::size_t> support(others.begin(), others.end());
            support.insert(std::upper_bound(support.begin(), support.end(), target), target);
            return visit(support);
        }
        const std::size_t still_needed = weight - 1 - depth;
        for (std::size_t j = start; j < n_; ++j) {
            if (j == target) continue;
            // Not enough coordinates left to finish this support.
            if (n_ - j - (target > j ? 1 : 0) < still_needed) break;
            others[depth] = j;
            acc[depth + 1] = acc[depth];
            acc[depth + 1] ^= columns_[j];
            if (!descend(target, weight, depth + 1, j + 1, acc, others, visit)) return false;
        }
        return true;
    }

    std::size_t n_;
    std::vector<BitVector> columns_;
};

std::optional<std::size_t> find_line(const BlrcCode& code, std::size_t i, const std::vector<std::size_t>& support) {
    const auto& geo = code.geometry();
    for (std::size_t j = 0; j < geo.num_lines(); ++j) {
        const auto& line = geo.line(j);
        if (line.size() == support.size() && std::binary_search(line.begin(), line.end(), i) && line == support) {
            return j;
        }
    }
    return std::nullopt;
}

void sort_alternatives(std::vector<RepairVector>& alts) {
    std::sort(alts.begin(), alts.end(), [](const RepairVector& a, const RepairVector& b) {
        constexpr auto none = std::numeric_limits<std::size_t>::max();
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        const auto la = a.line.value_or(none), lb = b.line.value_or(none);
        if (la != lb) return la < lb;
        return a.support < b.support;
    });
}

std::size_t default_r(const BlrcCode& code, std::optional<std::size_t> r) { return r.value_or(code.pg().s); }

}  // namespace

std::vector<RepairVector> line_repair_sets(const BlrcCode& code, std::size_t i) {
    check_coordinate(code, i);
    std::vector<RepairVector> out;
    const auto& geo = code.geometry();
    for (std::size_t j = 0; j < geo.num_lines(); ++j) {
        const auto& line = geo.line(j);
        if (!std::binary_search(line.begin(), line.end(), i)) continue;
        out.push_back({code.incidence().row(j), line, j});
    }
    return out;
}

std::vector<RepairVector> omega_r(const BlrcCode& code, std::size_t i, std::size_t r, double guard) {
    check_coordinate(code, i);
    if (candidate_count(code.n(), r + 1) > guard) {
        throw GuardExceeded("exhaustive search for coordinate " + std::to_string(i) + " with r = " +
                            std::to_string(r) + " exceeds the guard; use geometric mode or raise the guard");
    }
    std::vector<RepairVector> out;
    const DualSearch search(code);
    for (std::size_t w = 1; w <= r + 1; ++w) {
        search.run(i, w, [&](const std::vector<std::size_t>& support) {
            out.push_back({BitVector::from_support(code.n(), support), support, find_line(code, i, support)});
            return true;
        });
    }
    sort_alternatives(out);
    return out;
}

std::vector<RepairVector> repair_alternatives(const BlrcCode& code, std::size_t i, std::size_t r, MetricMode mode,
                                              double guard) {
    if (mode == MetricMode::Exhaustive) return omega_r(code, i, r, guard);
    auto lines = line_repair_sets(code, i);
    std::erase_if(lines, [r](const RepairVector& v) { return v.weight() > r + 1; });
    sort_alternatives(lines);
    return lines;
}

std::size_t repair_degree(const BlrcCode& code, std::size_t i, MetricMode mode, double guard) {
    check_coordinate(code, i);
    if (mode == MetricMode::Geometric) {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (const auto& v : line_repair_sets(code, i)) best = std::min(best, v.weight() - 1);
        return best;
    }
    const DualSearch search(code);
    for (std::size_t w = 1; w <= code.n(); ++w) {
        if (candidate_count(code.n(), w) > guard) {
            throw GuardExceeded("exhaustive repair-degree search for coordinate " + std::to_string(i) +
                                " exceeds the guard at weight " + std::to_string(w) + "; use geometric mode");
        }
        bool found = false;
        search.run(i, w, [&](const std::vector<std::size_t>&) {
            found = true;
            return false;
        });
        if (found) return w - 1;
    }
    throw Error("coordinate " + std::to_string(i) + " is covered by no parity check");
}

std::size_t overall_repair_degree(const BlrcCode& code, MetricMode mode, double guard) {
    std::vector<std::size_t> per(code.n());
    parallel_for(code.n(), [&](std::size_t i) { per[i] = repair_degree(code, i, mode, guard); });
    return *std::max_element(per.begin(), per.end());
}

std::size_t alternativity(const BlrcCode& code, std::size_t i, std::size_t r, MetricMode mode, double guard) {
    return repair_alternatives(code, i, r, mode, guard).size();
}

std::size_t overall_alternativity(const BlrcCode& code, std::size_t r, MetricMode mode, double guard) {
    std::vector<std::size_t> per(code.n());
    parallel_for(code.n(), [&](std::size_t i) { per[i] = alternativity(code, i, r, mode, guard); });
    return *std::min_element(per.begin(), per.end());
}

Tolerance tolerance_from(std::span<const RepairVector> alternatives, std::size_t i) {
    std::vector<std::vector<std::size_t>> sets;
    sets.reserve(alternatives.size());
    for (const auto& v : alternatives) {
        auto rest = v.support;
        std::erase(rest, i);
        sets.push_back(std::move(rest));
    }
    auto hs = minimum_hitting_set(sets);
    if (!hs) throw Error("a repair vector of weight 1 cannot be blocked; tolerance is unbounded");
    return {hs->size(), std::move(*hs)};
}

Tolerance tolerance(const BlrcCode& code, std::size_t i, std::size_t r, MetricMode mode, double guard) {
    const auto alts = repair_alternatives(code, i, r, mode, guard);
    return tolerance_from(alts, i);
}

std::size_t overall_tolerance(const BlrcCode& code, std::size_t r, MetricMode mode, double guard) {
    std::vector<std::size_t> per(code.n());
    parallel_for(code.n(), [&](std::size_t i) { per[i] = tolerance(code, i, r, mode, guard).delta; });
    return *std::min_element(per.begin(), per.end());
}

RepairProfile repair_profile(const BlrcCode& code, MetricMode mode, std::optional<std::size_t> r, double guard) {
    RepairProfile profile;
    profile.mode = mode;
    profile.symbols.resize(code.n());
    parallel_for(code.n(), [&](std::size_t i) { profile.symbols[i].r = repair_degree(code, i, mode, guard); });
    profile.r = 0;
    for (const auto& s : profile.symbols) profile.r = std::max(profile.r, s.r);
    profile.r_bound = r.value_or(profile.r);

    parallel_for(code.n(), [&](std::size_t i) {
        auto& sym = profile.symbols[i];
        const auto alts = repair_alternatives(code, i, profile.r_bound, mode, guard);
        sym.a = alts.size();
        auto tol = tolerance_from(alts, i);
        sym.delta = tol.delta;
        sym.blocking_set = std::move(tol.blocking_set);
        for (const auto& v : alts) {
            auto rest = v.support;
            std::erase(rest, i);
            sym.repair_sets.push_back(std::move(rest));
        }
    });
    profile.a = std::numeric_limits<std::size_t>::max();
    profile.delta = std::numeric_limits<std::size_t>::max();
    for (const auto& s : profile.symbols) {
        profile.a = std::min(profile.a, s.a);
        profile.delta = std::min(profile.delta, s.delta);
    }
    profile.balanced = is_balanced(profile);
    return profile;
}

bool is_balanced(const RepairProfile& profile) {
    return std::all_of(profile.symbols.begin(), profile.symbols.end(),
                       [&](const SymbolProfile& s) { return s.delta == profile.symbols.front().delta; });
}

RepairResult repair_symbol(std::span<const RepairVector> alternatives, const Received& received, std::size_t i,
                           std::span<const std::size_t> unavailable) {
    if (i >= received.size()) throw InvalidArgument("coordinate out of range");
    const bool i_unavailable = std::find(unavailable.begin(), unavailable.end(), i) != unavailable.end();
    if (received[i].has_value() && !i_unavailable) {
        throw InvalidArgument("symbol " + std::to_string(i) + " is neither erased nor unavailable");
    }
    std::vector<bool> blocked(received.size(), false);
    for (std::size_t j = 0; j < received.size(); ++j) blocked[j] = !received[j].has_value();
    for (auto j : unavailable) {
        if (j >= received.size()) throw InvalidArgument("unavailable coordinate out of range");
        blocked[j] = true;
    }
    for (std::size_t alt = 0; alt < alternatives.size(); ++alt) {
        const auto& v = alternatives[alt];
        const bool usable = std::none_of(v.support.begin(), v.support.end(),
                                         [&](std::size_t j) { return j != i && blocked[j]; });
        if (!usable) continue;
        std::uint8_t value = 0;
        for (auto j : v.support) {
            if (j != i) value ^= *received[j] & 1U;
        }
        return {value, alt, v, v.weight() - 1};
    }
    throw RepairError("symbol " + std::to_string(i) + " is not locally repairable under this availability");
}

RepairResult repair_symbol(const BlrcCode& code, const Received& received, std::size_t i,
                           std::span<const std::size_t> unavailable, MetricMode mode, std::optional<std::size_t> r,
                           double guard) {
    if (received.size() != code.n()) throw InvalidArgument("received word must have n symbols");
    const auto alts = repair_alternatives(code, i, default_r(code, r), mode, guard);
    return repair_symbol(alts, received, i, unavailable);
}

namespace {

// Per-trial generator keyed by (seed, trial); mt19937_64 and seed_seq are
// fully specified, so draws are identical on every platform.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

// Returns retrieved count on success.
std::optional<std::size_t> first_usable(const std::vector<RepairVector>& alts, std::size_t i,
                                        const std::vector<bool>& blocked) {
    for (const auto& v : alts) {
        if (std::none_of(v.support.begin(), v.support.end(), [&](std::size_t j) { return j != i && blocked[j]; })) {
            return v.weight() - 1;
        }
    }
    return std::nullopt;
}

}  // namespace

SimulationReport simulate_availability(const BlrcCode& code, const AvailabilityModel& model,
                                       const SimulationOptions& options) {
    const std::size_t n = code.n();
    SimulationReport report;
    report.trials = options.trials;
    report.seed = options.seed;
    report.r_bound = default_r(code, options.r);
    report.per_symbol_success.assign(n, 0.0);

    std::vector<std::vector<RepairVector>> alts(n);
    parallel_for(n, [&](std::size_t i) {
        alts[i] = repair_alternatives(code, i, report.r_bound, options.mode, options.guard);
    });

    std::size_t successes = 0;
    std::size_t retrieved_total = 0;
    std::vector<std::size_t> symbol_ok(n, 0), symbol_cases(n, 0);
    std::vector<bool> blocked(n, false);

    auto record = [&](std::size_t i, const std::vector<bool>& mask) {
        ++symbol_cases[i];
        ++report.cases;
        if (auto got = first_usable(alts[i], i, mask)) {
            ++symbol_ok[i];
            ++successes;
            retrieved_total += *got;
            return true;
        }
        ++report.failures;
        if (!report.failure_witness) {
            std::vector<std::size_t> down;
            for (std::size_t j = 0; j < n; ++j) {
                if (mask[j] && j != i) down.push_back(j);
            }
            report.failure_witness = {i, std::move(down)};
        }
        return false;
    };

    if (const auto* iid = std::get_if<IidUnavailability>(&model)) {
        if (iid->p < 0.0 || iid->p > 1.0) throw InvalidArgument("unavailability probability must be in [0, 1]");
        report.model = "iid";
        report.p = iid->p;
        // Coordinate j is unavailable iff its 64-bit draw falls below p * 2^64.
        const long double scaled = static_cast<long double>(iid->p) * 18446744073709551616.0L;
        const bool always = iid->p >= 1.0;
        const auto threshold = always ? std::uint64_t{0} : static_cast<std::uint64_t>(scaled);
        std::size_t all_ok_trials = 0;
        for (std::size_t trial = 0; trial < options.trials; ++trial) {
            auto engine = trial_engine(options.seed, trial);
            for (std::size_t j = 0; j < n; ++j) blocked[j] = always || engine() < threshold;
            bool all_ok = true;
            for (std::size_t i = 0; i < n; ++i) all_ok = record(i, blocked) && all_ok;
            all_ok_trials += all_ok;
        }
        report.all_symbols_fraction =
            options.trials ? static_cast<double>(all_ok_trials) / static_cast<double>(options.trials) : 1.0;
    } else {
        const auto u = std::get<AdversarialUnavailability>(model).u;
        if (u >= n) throw InvalidArgument("adversarial set size must be below n");
        report.model = "adversarial";
        report.u = u;
        report.exhaustive = static_cast<double>(n) * binomial(n - 1, u) <= options.exhaustive_limit;
        std::vector<std::size_t> symbol_failures(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t failures_before = report.failures;
            std::vector<std::size_t> pool;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) pool.push_back(j);
            }
            auto apply = [&](const std::vector<std::size_t>& down) {
                std::fill(blocked.begin(), blocked.end(), false);
                for (auto j : down) blocked[j] = true;
                record(i, blocked);
            };
            if (report.exhaustive) {
                std::vector<std::size_t> idx(u);
                for (std::size_t x = 0; x < u; ++x) idx[x] = x;
                std::vector<std::size_t> down(u);
                while (true) {
                    for (std::size_t x = 0; x < u; ++x) down[x] = pool[idx[x]];
                    apply(down);
                    std::size_t x = 0;
                    while (x < u && idx[x] + 1 == (x + 1 < u ? idx[x + 1] : pool.size())) ++x;
                    if (x == u) break;
                    ++idx[x];
                    for (std::size_t y = 0; y < x; ++y) idx[y] = y;
                }
            } else {
                for (std::size_t trial = 0; trial < options.trials; ++trial) {
                    auto engine = trial_engine(options.seed, i * options.trials + trial);
                    auto shuffled = pool;
                    for (std::size_t x = 0; x < u; ++x) {
                        const auto pick = x + static_cast<std::size_t>(engine() % (shuffled.size() - x));
                        std::swap(shuffled[x], shuffled[pick]);
                    }
                    std::vector<std::size_t> down(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(u));
                    std::sort(down.begin(), down.end());
                    apply(down);
                }
            }
            symbol_failures[i] = report.failures - failures_before;
        }
        const auto clean = std::count(symbol_failures.begin(), symbol_failures.end(), 0);
        report.all_symbols_fraction = n ? static_cast<double>(clean) / static_cast<double>(n) : 1.0;
    }

    for (std::size_t i = 0; i < n; ++i) {
        report.per_symbol_success[i] =
            symbol_cases[i] ? static_cast<double>(symbol_ok[i]) / static_cast<double>(symbol_cases[i]) : 1.0;
    }
    report.success_fraction = report.cases ? static_cast<double>(successes) / static_cast<double>(report.cases) : 1.0;
    report.mean_retrieved = successes ? static_cast<double>(retrieved_total) / static_cast<double>(successes) : 0.0;
    return report;
}

}  // namespace blrc
