#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nilslice/fixtures.hpp"

using namespace nilslice;

TEST_CASE("fixture table shape") {
    const auto& rows = exceptional_fixtures();
    CHECK(rows.size() == 22);
    int e6 = 0, f4 = 0, g2 = 0;
    for (const auto& r : rows) {
        if (r.group == "E6") ++e6;
        if (r.group == "F4") ++f4;
        if (r.group == "G2") ++g2;
    }
    CHECK(e6 == 10);
    CHECK(f4 == 8);
    CHECK(g2 == 4);
}

TEST_CASE("all cross-checks pass with zero discrepancies") {
    const FixtureCheckResult res = check_exceptional_fixtures();
    CHECK(res.rowsChecked == 22);
    CHECK(res.discrepancies == 0);
    for (const auto& m : res.messages) MESSAGE(m);
}

TEST_CASE("invariant degrees are the classical lists") {
    CHECK(exceptional_invariant_degrees("E6") ==
          std::vector<int>{2, 5, 6, 8, 9, 12});
    CHECK(exceptional_invariant_degrees("F4") == std::vector<int>{2, 6, 8, 12});
    CHECK(exceptional_invariant_degrees("G2") == std::vector<int>{2, 6});
    CHECK_THROWS(exceptional_invariant_degrees("E9"));
}
