#include <doctest.h>

#include <filesystem>
#include <random>

#include "blrc/code.hpp"
#include "blrc/error.hpp"
#include "oracles.hpp"

using namespace blrc;

namespace {

void check_structure(const BlrcCode& code) {
    const auto& inc = code.geometry();
    const auto n_int = oracle::incidence(inc);
    CHECK(code.n() == inc.num_points());
    CHECK(code.m() == oracle::rank(n_int));
    CHECK(code.k() == code.n() - code.m());
    CHECK(code.info_set().size() == code.k());

    // H rows are rows of N, independent.
    for (std::size_t r = 0; r < code.m(); ++r) {
        CHECK(code.parity_check().row(r) == code.incidence().row(code.parity_rows()[r]));
    }
    // Row space of H equals that of N.
    for (std::size_t j = 0; j < code.incidence().rows(); ++j) {
        auto h = code.parity_check();
        h.append_row(code.incidence().row(j));
        CHECK(rank2(h) == code.m());
    }
    // G H^T = 0 and G N^T = 0.
    CHECK((code.generator() * code.parity_check().transpose()).is_zero());
    CHECK((code.generator() * code.incidence().transpose()).is_zero());
    // Systematic on the information set.
    CHECK(code.generator().select_columns(code.info_set()) == BitMatrix::identity(code.k()));
}

}  // namespace

TEST_CASE("grid(2) code") {
    const auto code = build_code(grid(2));
    CHECK(code.n() == 9);
    CHECK(code.k() == 4);
    CHECK(code.m() == 5);
    check_structure(code);
    const auto r = rate(code);
    CHECK(r.rate == Rational(4, 9));
    CHECK(r.footprint == Rational(9, 4));
    CHECK(to_string(r.rate) == "4/9");
    CHECK(to_string(Rational(3)) == "3");
}

TEST_CASE("code structure on several geometries") {
    for (const auto& g : {grid(1), grid(3), grid(5), symplectic_gq(2), symplectic_gq(3), elliptic_quadric_gq(2),
                          dual(elliptic_quadric_gq(2)), load(std::filesystem::path(BLRC_FIXTURE_DIR) / "fano.txt")}) {
        CAPTURE(g.label());
        check_structure(build_code(g));
    }
}

TEST_CASE("encode and reconstruct round trip") {
    std::mt19937_64 rng(23);
    for (const auto& g : {grid(2), symplectic_gq(2), elliptic_quadric_gq(2)}) {
        const auto code = build_code(g);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::uint8_t> msg(code.k());
            for (auto& b : msg) b = rng() & 1;
            const auto c = encode(code, msg);
            REQUIRE(c.size() == code.n());
            // Systematic: the message sits on the information set.
            for (std::size_t j = 0; j < code.k(); ++j) CHECK(c[code.info_set()[j]] == msg[j]);
            // N c^T = 0.
            CHECK(code.incidence().right_multiply(BitVector::from_bits(c)).none());

            std::vector<std::uint8_t> vals;
            for (auto j : code.info_set()) vals.push_back(c[j]);
            CHECK(reconstruct(code, code.info_set(), vals) == msg);
        }
    }
}

TEST_CASE("non-MDS and information sets") {
    const auto code = build_code(grid(2));
    CHECK(is_information_set(code, code.info_set()));
    // A whole line plus one point has a dependent column set (line sums to zero).
    const std::vector<std::size_t> bad{0, 1, 2, 3};
    CHECK_FALSE(is_information_set(code, bad));
    CHECK_THROWS_AS(reconstruct(code, bad, BitVector(4)), InvalidArgument);
    CHECK_FALSE(is_mds(code));
    const auto witness = find_non_information_set(code);
    REQUIRE(witness);
    CHECK_FALSE(is_information_set(code, *witness));
    CHECK_THROWS_AS(is_mds(build_code(symplectic_gq(3)), 1e3), GuardExceeded);
}

TEST_CASE("encode checks the message length") {
    const auto code = build_code(grid(2));
    CHECK_THROWS_AS(encode(code, BitVector(3)), InvalidArgument);
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10.0);
    CHECK(binomial(5, 0) == 1.0);
    CHECK(binomial(3, 5) == 0.0);
    CHECK(binomial(100, 50) > 1e29);
}
