#include <doctest.h>

#include <random>
#include <set>

#include "blrc/bit_matrix.hpp"
#include "blrc/error.hpp"
#include "blrc/hitting_set.hpp"
#include "blrc/small_field.hpp"
#include "oracles.hpp"

using namespace blrc;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, bit(rng));
    }
    return m;
}

oracle::Matrix to_ints(const BitMatrix& m) {
    oracle::Matrix out(m.rows(), oracle::Row(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c);
    }
    return out;
}

}  // namespace

TEST_CASE("bit vector basics") {
    auto v = BitVector::from_bits(std::vector<std::uint8_t>{1, 0, 1, 1, 0, 0, 0, 0, 1});
    CHECK(v.size() == 9);
    CHECK(v.weight() == 4);
    CHECK(v.support() == std::vector<std::size_t>{0, 2, 3, 8});
    CHECK(v.first_set() == 0);
    CHECK(v.to_hex() == "b08");

    BitVector w(130);
    CHECK(w.none());
    CHECK(w.first_set() == 130);
    w.set(129);
    w.set(64);
    CHECK(w.weight() == 2);
    CHECK(w.first_set() == 64);
    w.flip(64);
    CHECK(w.support() == std::vector<std::size_t>{129});

    const std::vector<std::size_t> s{1, 3};
    auto a = BitVector::from_support(4, s);
    auto b = BitVector::from_bits(std::vector<std::uint8_t>{1, 1, 0, 0});
    CHECK(a.dot(b) == true);
    CHECK((a ^ b).support() == std::vector<std::size_t>{0, 3});
}

TEST_CASE("rank agrees with the elimination oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 20, cols = 1 + rng() % 140;
        const double density = (trial % 4 + 1) / 8.0;
        const auto m = random_matrix(rng, rows, cols, density);
        CHECK(rank2(m) == oracle::rank(to_ints(m)));
        CHECK(rank2(m.transpose()) == rank2(m));
    }
    CHECK(rank2(BitMatrix(3, 5)) == 0);
    CHECK(rank2(BitMatrix::identity(70)) == 70);
}

TEST_CASE("rref is reduced and spans the same space") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = random_matrix(rng, 1 + rng() % 12, 1 + rng() % 30);
        const auto e = rref2(m);
        const auto rk = rank2(m);
        REQUIRE(e.pivot_cols.size() == rk);
        CHECK(e.reduced.rows() == m.rows());
        for (std::size_t r = 0; r < rk; ++r) {
            CHECK(e.reduced.row(r).first_set() == e.pivot_cols[r]);
            for (std::size_t r2 = 0; r2 < e.reduced.rows(); ++r2) {
                CHECK(e.reduced.get(r2, e.pivot_cols[r]) == (r2 == r));
            }
        }
        for (std::size_t r = rk; r < e.reduced.rows(); ++r) CHECK(e.reduced.row(r).none());
        auto stacked = to_ints(m);
        for (auto& row : to_ints(e.reduced)) stacked.push_back(row);
        CHECK(oracle::rank(stacked) == rk);
    }
}

TEST_CASE("nullspace has the right dimension and is annihilated") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = random_matrix(rng, 1 + rng() % 15, 1 + rng() % 40);
        const auto ns = nullspace2(m);
        CHECK(ns.rows() == m.cols() - rank2(m));
        CHECK(rank2(ns) == ns.rows());
        for (std::size_t r = 0; r < ns.rows(); ++r) CHECK(m.right_multiply(ns.row(r)).none());
    }
}

TEST_CASE("solve_left2") {
    std::mt19937_64 rng(17);
    int solved = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        const auto a = random_matrix(rng, n, n);
        BitVector x(n);
        for (std::size_t i = 0; i < n; ++i) x.set(i, rng() & 1);
        const auto b = a.left_multiply(x);
        const auto got = solve_left2(a, b);
        if (rank2(a) == n) {
            REQUIRE(got);
            CHECK(*got == x);
            ++solved;
        } else {
            CHECK_FALSE(got);
        }
    }
    CHECK(solved > 20);
    CHECK(solve_left2(BitMatrix(0, 0), BitVector(0)));
}

TEST_CASE("matrix product and transpose") {
    const auto a = BitMatrix::from_rows({{1, 0, 1}, {0, 1, 1}});
    const auto b = BitMatrix::from_rows({{1, 1}, {0, 1}, {1, 0}});
    const auto p = a * b;
    CHECK(p == BitMatrix::from_rows({{0, 1}, {1, 1}}));
    CHECK(a.transpose().transpose() == a);
    CHECK((a * BitMatrix::identity(3)) == a);
    const std::vector<std::size_t> cols{2, 0};
    CHECK(a.select_columns(cols) == BitMatrix::from_rows({{1, 1}, {1, 0}}));
    CHECK(a.column(2).support() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("small fields satisfy the field axioms") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        CAPTURE(q);
        const SmallField f(q);
        for (unsigned x = 0; x < q; ++x) {
            const auto ex = static_cast<SmallField::Element>(x);
            CHECK(f.add(ex, 0) == ex);
            CHECK(f.mul(ex, 1) == ex);
            CHECK(f.add(ex, f.neg(ex)) == 0);
            if (x) CHECK(f.mul(ex, f.inv(ex)) == 1);
            for (unsigned y = 0; y < q; ++y) {
                const auto ey = static_cast<SmallField::Element>(y);
                CHECK(f.mul(ex, ey) == f.mul(ey, ex));
                if (x && y) CHECK(f.mul(ex, ey) != 0);
                for (unsigned z = 0; z < q; z += 3) {
                    const auto ez = static_cast<SmallField::Element>(z);
                    CHECK(f.mul(ex, f.add(ey, ez)) == f.add(f.mul(ex, ey), f.mul(ex, ez)));
                    CHECK(f.mul(f.mul(ex, ey), ez) == f.mul(ex, f.mul(ey, ez)));
                }
            }
        }
    }
    const SmallField f4(4);
    CHECK(f4.mul(2, 2) == 3);  // x^2 = x + 1
    CHECK(f4.characteristic() == 2);
    CHECK(f4.degree() == 2);
    CHECK_THROWS_AS(f4.inv(0), InvalidArgument);
    CHECK_THROWS_AS(SmallField(6), InvalidArgument);
    CHECK_THROWS_AS(SmallField(32), InvalidArgument);
    CHECK_FALSE(SmallField::supported(1));
}

TEST_CASE("minimum hitting set matches brute force") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t universe = 2 + rng() % 10, count = 1 + rng() % 8;
        std::vector<std::vector<std::size_t>> sets;
        for (std::size_t s = 0; s < count; ++s) {
            std::set<std::size_t> members;
            const std::size_t size = 1 + rng() % 4;
            while (members.size() < std::min(size, universe)) members.insert(rng() % universe);
            sets.emplace_back(members.begin(), members.end());
        }
        const auto hs = minimum_hitting_set(sets);
        REQUIRE(hs);
        CHECK(hs->size() == oracle::min_hitting_set_size(sets));
        CHECK(std::is_sorted(hs->begin(), hs->end()));
        for (const auto& s : sets) {
            CHECK(std::any_of(s.begin(), s.end(),
                              [&](auto e) { return std::binary_search(hs->begin(), hs->end(), e); }));
        }
    }
    const std::vector<std::vector<std::size_t>> with_empty{{1, 2}, {}};
    CHECK_FALSE(minimum_hitting_set(with_empty));
    CHECK(minimum_hitting_set(std::vector<std::vector<std::size_t>>{})->empty());
}
