#include <doctest.h>

#include <random>

#include "blrc/error.hpp"
#include "blrc/repair.hpp"
#include "oracles.hpp"

using namespace blrc;

namespace {

std::vector<std::vector<std::size_t>> supports(const std::vector<RepairVector>& alts) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& v : alts) out.push_back(v.support);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::size_t>> without(const std::vector<std::vector<std::size_t>>& sets, std::size_t i) {
    auto out = sets;
    for (auto& s : out) s.erase(std::remove(s.begin(), s.end(), i), s.end());
    return out;
}

Received as_received(const std::vector<std::uint8_t>& c) { return {c.begin(), c.end()}; }

}  // namespace

TEST_CASE("exhaustive Omega_r matches the enumerated dual code") {
    for (const auto& g : {grid(2), grid(3), symplectic_gq(2)}) {
        CAPTURE(g.label());
        const auto code = build_code(g);
        const auto dual_code = oracle::row_space_supports(oracle::incidence(g));
        const auto s = code.pg().s;
        for (std::size_t i = 0; i < code.n(); ++i) {
            const auto expected = oracle::omega(dual_code, i, s);
            const auto alts = omega_r(code, i, s);
            CHECK(supports(alts) == expected);
            for (const auto& v : alts) {
                CHECK(v.v.support() == v.support);
                CHECK((code.generator().right_multiply(v.v)).none());
            }
            const auto t = tolerance_from(alts, i);
            CHECK(t.delta == oracle::min_hitting_set_size(without(expected, i)));
        }
    }
}

TEST_CASE("grid(2) profile") {
    const auto code = build_code(grid(2));
    for (auto mode : {MetricMode::Geometric, MetricMode::Exhaustive}) {
        const auto p = repair_profile(code, mode, 2);
        CHECK(p.r == 2);
        CHECK(p.a == 2);
        CHECK(p.delta == 2);
        CHECK(p.balanced);
        for (const auto& s : p.symbols) {
            CHECK(s.r == 2);
            CHECK(s.a == 2);
            CHECK(s.delta == 2);
            CHECK(s.blocking_set.size() == 2);
        }
    }
    CHECK(overall_repair_degree(code, MetricMode::Exhaustive) == 2);
    CHECK(overall_alternativity(code, 2, MetricMode::Exhaustive) == 2);
    CHECK(overall_tolerance(code, 2, MetricMode::Exhaustive) == 2);
}

TEST_CASE("W(2) exhaustive profile") {
    const auto code = build_code(symplectic_gq(2));
    const auto p = repair_profile(code, MetricMode::Exhaustive, 2);
    CHECK(p.r == 2);
    CHECK(p.a == 3);
    CHECK(p.delta == 3);
    CHECK(p.balanced);
}

TEST_CASE("line repair sets follow the geometry") {
    const auto code = build_code(symplectic_gq(2));
    for (std::size_t i = 0; i < code.n(); ++i) {
        const auto lines = line_repair_sets(code, i);
        CHECK(lines.size() == code.pg().t + 1);
        for (const auto& v : lines) {
            REQUIRE(v.line);
            CHECK(code.geometry().line(*v.line) == v.support);
        }
    }
    // Exhaustive alternatives put the matching lines first at each weight.
    const auto alts = omega_r(code, 0, 2);
    for (const auto& v : alts) {
        if (v.weight() == 3) CHECK(v.line.has_value());
    }
}

TEST_CASE("guards") {
    const auto code = build_code(elliptic_quadric_gq(2));
    CHECK_THROWS_AS(omega_r(code, 0, 2, 10.0), GuardExceeded);
    CHECK_THROWS_AS(repair_profile(code, MetricMode::Exhaustive, 2, 10.0), GuardExceeded);
    CHECK_THROWS_AS(omega_r(code, code.n(), 2), InvalidArgument);
}

TEST_CASE("repair round trips") {
    std::mt19937_64 rng(29);
    for (const auto& g : {grid(2), symplectic_gq(2)}) {
        const auto code = build_code(g);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::uint8_t> msg(code.k());
            for (auto& b : msg) b = rng() & 1;
            const auto c = encode(code, msg);
            for (std::size_t i = 0; i < code.n(); ++i) {
                auto rx = as_received(c);
                rx[i].reset();
                const auto res = repair_symbol(code, rx, i, {});
                CHECK(res.value == c[i]);
                CHECK(res.alternative == 0);
                CHECK(res.retrieved == code.pg().s);
            }
        }
    }
}

TEST_CASE("repair respects availability") {
    const auto code = build_code(grid(2));
    const auto c = encode(code, std::vector<std::uint8_t>{1, 0, 1, 1});
    const auto profile = repair_profile(code, MetricMode::Geometric, 2);
    for (std::size_t i = 0; i < code.n(); ++i) {
        auto rx = as_received(c);
        const auto& blocking = profile.symbols[i].blocking_set;
        std::vector<std::size_t> down(blocking.begin(), blocking.end());
        down.push_back(i);
        CHECK_THROWS_AS(repair_symbol(code, rx, i, down), RepairError);
        // One fewer unavailable node leaves a usable line.
        down.erase(down.begin());
        CHECK(repair_symbol(code, rx, i, down).value == c[i]);
    }
    auto rx = as_received(c);
    CHECK_THROWS_AS(repair_symbol(code, rx, 0, {}), InvalidArgument);
}

TEST_CASE("simulation edge cases") {
    const auto code = build_code(symplectic_gq(2));
    SimulationOptions opts;
    opts.trials = 50;
    opts.seed = 5;

    auto none = simulate_availability(code, IidUnavailability{0.0}, opts);
    CHECK(none.success_fraction == 1.0);
    CHECK(none.all_symbols_fraction == 1.0);
    CHECK(none.mean_retrieved == 2.0);

    auto all = simulate_availability(code, IidUnavailability{1.0}, opts);
    CHECK(all.success_fraction == 0.0);
    CHECK(all.failure_witness.has_value());

    auto safe = simulate_availability(code, AdversarialUnavailability{2}, opts);
    CHECK(safe.exhaustive);
    CHECK(safe.cases == 15 * 91);
    CHECK(safe.success_fraction == 1.0);

    auto broken = simulate_availability(code, AdversarialUnavailability{3}, opts);
    CHECK(broken.failures > 0);
    CHECK(broken.all_symbols_fraction == 0.0);

    CHECK_THROWS_AS(simulate_availability(code, IidUnavailability{1.5}, opts), InvalidArgument);
    CHECK_THROWS_AS(simulate_availability(code, AdversarialUnavailability{15}, opts), InvalidArgument);
}

TEST_CASE("simulation is reproducible and seed dependent") {
    const auto code = build_code(grid(3));
    SimulationOptions opts;
    opts.trials = 200;
    opts.seed = 42;
    const auto a = simulate_availability(code, IidUnavailability{0.2}, opts);
    const auto b = simulate_availability(code, IidUnavailability{0.2}, opts);
    CHECK(a.per_symbol_success == b.per_symbol_success);
    CHECK(a.failures == b.failures);
    opts.seed = 43;
    const auto c = simulate_availability(code, IidUnavailability{0.2}, opts);
    CHECK(a.per_symbol_success != c.per_symbol_success);

    opts.exhaustive_limit = 0;
    const auto s1 = simulate_availability(code, AdversarialUnavailability{2}, opts);
    const auto s2 = simulate_availability(code, AdversarialUnavailability{2}, opts);
    CHECK_FALSE(s1.exhaustive);
    CHECK(s1.cases == code.n() * opts.trials);
    CHECK(s1.per_symbol_success == s2.per_symbol_success);
}
