#include "doctest.h"
#include "spin7/sweep.hpp"

using namespace spin7;

TEST_SUITE("sweep") {

TEST_CASE("random stream is deterministic") {
    RandomStream a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    RandomStream c(42), d(43);
    CHECK(c.next_u64() != d.next_u64());
}

TEST_CASE("parallel calibration scan equals the serial reference") {
    CalibrationScan s = calibration_scan(20000, 7, false);
    CalibrationScan p = calibration_scan(20000, 7, true);
    CHECK(s.max_value == p.max_value);
    CHECK(s.argmax == p.argmax);
    CHECK(s.samples == 20000);
    CHECK(s.max_value <= 1.0 + 1e-9);
    CHECK(s.max_value > 0.9);  // the bound is attained up to sampling
}

TEST_CASE("phase grid shape and reference cell") {
    auto rows = phase_portrait_grid(0.25, 0.75, 1.0, 3.0, 1, 1, false);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0][0] == 0.5);
    CHECK(rows[0][1] == 2.0);
    CHECK(rows[0][2] == 0.75);
    CHECK(rows[0][3] == 3.0);

    auto grid = phase_portrait_grid(-1.5, 1.5, -6, 6, 13, 9, false);
    CHECK(grid.size() == 13 * 9);
}

TEST_CASE("grid cells are nudged off the degenerate lines") {
    auto rows = phase_portrait_grid(-0.5, 0.5, 0.0, 1.0, 1, 1, false);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0][0] != 0.0);
}

TEST_CASE("parallel phase grid equals the serial reference") {
    auto s = phase_portrait_grid(-1.4, 1.4, -5, 5, 40, 40, false);
    auto p = phase_portrait_grid(-1.4, 1.4, -5, 5, 40, 40, true);
    CHECK(s == p);
}

}  // TEST_SUITE
