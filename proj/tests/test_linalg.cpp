#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nilslice/rational_matrix.hpp"
#include "nilslice/slice.hpp"

using namespace nilslice;

namespace {

RationalMatrix random_matrix(int rows, int cols, SplitMix64& rng) {
    RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = random_rational(rng);
    return m;
}

}  // namespace

TEST_CASE("identity and arithmetic") {
    RationalMatrix id = RationalMatrix::identity(3);
    RationalMatrix m(3, 3);
    m.at(0, 1) = Rat(2);
    m.at(2, 0) = Rat(-1, 3);
    CHECK(id * m == m);
    CHECK(m * id == m);
    CHECK((m - m).is_zero());
    CHECK(m + m == m * Rat(2));
    CHECK(m.transpose().transpose() == m);
}

TEST_CASE("rank of known matrices") {
    RationalMatrix m(3, 3);
    // two equal rows, one independent
    for (int j = 0; j < 3; ++j) {
        m.at(0, j) = Rat(j + 1);
        m.at(1, j) = Rat(j + 1);
    }
    m.at(2, 0) = Rat(1);
    CHECK(rank_of(m) == 2);
    CHECK(rank_of(RationalMatrix(4, 4)) == 0);
    CHECK(rank_of(RationalMatrix::identity(5)) == 5);
}

TEST_CASE("kernel basis dimension and membership") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        RationalMatrix a = random_matrix(3, 5, rng);
        const int r = rank_of(a);
        auto kb = kernel_basis(a);
        CHECK(static_cast<int>(kb.size()) == 5 - r);
        for (const RationalVector& v : kb) {
            for (int i = 0; i < 3; ++i) {
                Rat s(0);
                for (int j = 0; j < 5; ++j) s += a.at(i, j) * v[j];
                CHECK(s == 0);
            }
        }
    }
}

TEST_CASE("solve returns an exact solution when consistent") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        RationalMatrix a = random_matrix(4, 4, rng);
        RationalVector x0(4);
        for (auto& v : x0) v = random_rational(rng);
        RationalVector b(4, Rat(0));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) b[i] += a.at(i, j) * x0[j];
        auto sol = solve(a, b);
        REQUIRE(sol.has_value());
        for (int i = 0; i < 4; ++i) {
            Rat s(0);
            for (int j = 0; j < 4; ++j) s += a.at(i, j) * (*sol)[j];
            CHECK(s == b[i]);
        }
    }
}

TEST_CASE("solve detects inconsistency") {
    RationalMatrix a(2, 2);
    a.at(0, 0) = Rat(1);
    a.at(1, 0) = Rat(2);  // second row is twice the first, column 2 empty
    RationalVector b{Rat(1), Rat(3)};
    CHECK(!solve(a, b).has_value());
}

TEST_CASE("interpolation recovers polynomial coefficients") {
    // p(t) = 3 - t/2 + 7 t^3 sampled at 0..3
    std::vector<Rat> nodes{Rat(0), Rat(1), Rat(2), Rat(3)};
    std::vector<Rat> vals;
    for (const Rat& t : nodes)
        vals.push_back(Rat(3) - t / 2 + Rat(7) * t * t * t);
    auto cs = interpolate_coeffs(nodes, vals);
    CHECK(cs[0] == 3);
    CHECK(cs[1] == Rat(-1, 2));
    CHECK(cs[2] == 0);
    CHECK(cs[3] == 7);
}

TEST_CASE("rng is deterministic and rationals stay bounded") {
    auto p1 = random_point(8, 42, 0);
    auto p2 = random_point(8, 42, 0);
    auto p3 = random_point(8, 42, 1);
    CHECK(p1 == p2);
    CHECK(p1 != p3);
    SplitMix64 rng(kDefaultSeed);
    for (int i = 0; i < 100; ++i) {
        Rat r = random_rational(rng);
        CHECK(abs(r.get_num()) <= 1000000);
        CHECK(r.get_den() <= 1000000);
    }
}
