#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fourgeo/kernels/geography.hpp"
#include "fourgeo/kernels/ledger.hpp"
#include "fourgeo/knots/knot.hpp"
#include "support.hpp"

using namespace fourgeo;

TEST_SUITE("geography kernel") {
  TEST_CASE("rows for n = 2..6") {
    const auto rows = kernels::geography_scan(2, 6);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].n == 2);
    CHECK(rows[2].n == 4);
    CHECK(rows[2].chi_h == 7490);
    CHECK(rows[2].bmy_gap == 3536);
    CHECK(rows[2].side == BmySide::below);
    CHECK(rows[0].sigma == -30);
  }

  TEST_CASE("parallel matches serial") {
    CHECK(kernels::geography_scan(2, 80) == kernels::geography_scan_serial(2, 80));
    CHECK(kernels::geography_scan(7, 7) == kernels::geography_scan_serial(7, 7));
  }

  TEST_CASE("range checks") {
    CHECK_THROWS_AS(kernels::geography_scan(1, 5), Error);
    CHECK_THROWS_AS(kernels::geography_scan(5, 4), Error);
  }
}

TEST_SUITE("ledger kernels") {
  TEST_CASE("parallel matches serial") {
    const LaurentPoly base = testing::two_strand_torus_alexander(57).substitute_square();
    std::vector<LaurentPoly> alex;
    for (long g = 1; g <= 40; ++g) alex.push_back(testing::two_strand_torus_alexander(g));
    for (long m = 2; m <= 20; ++m) alex.push_back(*twist_knot(m).alexander);
    const auto serial = kernels::surgery_ledgers_serial(base, alex);
    CHECK(kernels::surgery_ledgers(base, alex) == serial);
    CHECK(kernels::count_collisions(serial) == kernels::count_collisions_serial(serial));
    CHECK(kernels::count_collisions(serial) == 0);
  }

  TEST_CASE("ledger is base times the substituted polynomial") {
    const LaurentPoly base = LaurentPoly::from_terms({{1, 1}, {-1, 1}});
    const std::vector<LaurentPoly> alex = {LaurentPoly::from_terms({{1, 1}, {0, -1}, {-1, 1}})};
    const auto out = kernels::surgery_ledgers(base, alex);
    // (t + t^-1)(t^2 - 1 + t^-2) = t^3 + t^-3
    CHECK(out[0] == LaurentPoly::from_terms({{3, 1}, {-3, 1}}));
  }

  TEST_CASE("collision count") {
    const std::vector<LaurentPoly> v = {LaurentPoly(1), LaurentPoly(2), LaurentPoly(1), LaurentPoly(1)};
    CHECK(kernels::count_collisions_serial(v) == 3);
    CHECK(kernels::count_collisions(v) == 3);
    CHECK(kernels::count_collisions(std::vector<LaurentPoly>{}) == 0);
  }
}
