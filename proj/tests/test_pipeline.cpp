#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fourgeo/calculus/surgery.hpp"
#include "fourgeo/pipeline/pipeline.hpp"
#include "support.hpp"

using namespace fourgeo;
using testing::poly;

namespace {

// Expected closed forms, written out independently of the library.
const Poly kSumC2 = poly({{"1", 7}, {"12", 5}, {"-12", 4}, {"6", 3}, {"22", 0}});
const Poly kSumC1sq = poly({{"3", 7}, {"20", 5}, {"-24", 4}, {"6", 3}, {"2", 0}});
const Poly kSumChi = poly({{"1/3", 7}, {"8/3", 5}, {"-3", 4}, {"1", 3}, {"2", 0}});
const Poly kSumSigma = poly({{"1/3", 7}, {"-4/3", 5}, {"-2", 3}, {"-14", 0}});
const Poly kGenusF = poly({{"3", 5}, {"-3", 4}, {"1", 3}, {"1", 0}});

bool all_errors_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass && c.severity == Severity::error) return false;
  return true;
}

}  // namespace

TEST_SUITE("mode") {
  TEST_CASE("numeric mode needs n >= 2") {
    CHECK_THROWS_AS(Mode::numeric(1), Error);
    CHECK(Mode::numeric(2).n() == 2);
    CHECK(Mode::symbolic().is_symbolic());
    CHECK_THROWS_AS((void)Mode::symbolic().n(), Error);
    CHECK(Mode::numeric(3).fix(kSumChi) == Scalar(1163));
  }
}

TEST_SUITE("branched cover stage") {
  TEST_CASE("symbolic") {
    const auto r = build_branched_cover(Mode::symbolic());
    CHECK(r.manifold.c2() == Scalar(pow(Poly::variable(), 7)));
    CHECK(r.manifold.chi_h() == Scalar(poly({{"1/3", 7}, {"-1/3", 5}})));
    CHECK(r.manifold.sigma == Scalar(poly({{"1/3", 7}, {"-4/3", 5}})));
    REQUIRE(r.fiber_data.has_value());
    CHECK(r.fiber_data->e_reg == Scalar(poly({{"-3", 5}, {"3", 4}})));
    CHECK(r.fiber_data->e_sing == Scalar(poly({{"-2", 5}, {"3", 4}})));
    CHECK(r.fiber_data->e_ltilde == Scalar(poly({{"-2", 3}, {"4", 2}})));
    CHECK(all_errors_pass(r.checks));
  }

  TEST_CASE("n = 3") {
    const auto r = build_branched_cover(Mode::numeric(3));
    CHECK(r.manifold.e == Scalar(2187));
    CHECK(r.manifold.sigma == Scalar(405));
    CHECK(r.manifold.c1sq() == Scalar(5589));
  }

  TEST_CASE("n = 2") {
    const auto r = build_branched_cover(Mode::numeric(2));
    CHECK(r.manifold.e == Scalar(128));
    CHECK(r.manifold.sigma == Scalar(0));
    CHECK(r.manifold.c1sq() == Scalar(256));
  }
}

TEST_SUITE("resolved fiber") {
  TEST_CASE("symbolic") {
    const auto f = build_resolved_fiber(Mode::symbolic());
    CHECK(f.surface.genus == Scalar(kGenusF));
    CHECK(f.surface.self_int == Scalar(poly({{"2", 3}})));
    CHECK(f.intersections == Scalar(pow(Poly::variable(), 3)));
    CHECK(all_errors_pass(f.checks));
  }

  TEST_CASE("numeric") {
    const auto f2 = build_resolved_fiber(Mode::numeric(2));
    CHECK(f2.surface.genus == Scalar(57));
    CHECK(f2.surface.self_int == Scalar(16));
    const auto f3 = build_resolved_fiber(Mode::numeric(3));
    CHECK(f3.surface.genus == Scalar(514));
    CHECK(f3.surface.self_int == Scalar(54));
  }
}

TEST_SUITE("sum partner") {
  TEST_CASE("symbolic") {
    const auto r = build_sum_partner(Mode::symbolic());
    CHECK(r.manifold.sigma == Scalar(poly({{"-2", 3}, {"-14", 0}})));
    CHECK(r.manifold.chi_h() == Scalar(2));
    CHECK(r.manifold.c2() == Scalar(poly({{"2", 3}, {"22", 0}})));
    CHECK(r.manifold.c1sq() == Scalar(poly({{"-2", 3}, {"2", 0}})));
    CHECK(r.manifold.simply_connected.status == Connectivity::declared_true);
    CHECK(all_errors_pass(r.checks));
  }

  TEST_CASE("numeric") {
    const auto r2 = build_sum_partner(Mode::numeric(2));
    CHECK(r2.manifold.e == Scalar(38));
    CHECK(r2.manifold.sigma == Scalar(-30));
    const auto& graft = r2.manifold.surface(kPartnerSurface);
    CHECK(graft.genus == Scalar(57));
    CHECK(graft.self_int == Scalar(-16));
    REQUIRE(r2.manifold.sw->value.has_value());
    CHECK(r2.manifold.sw->value->max_exponent() == 2 * 57);
    const auto r3 = build_sum_partner(Mode::numeric(3));
    CHECK(r3.manifold.e == Scalar(76));
    CHECK(r3.manifold.sigma == Scalar(-68));
  }
}

TEST_SUITE("fiber sum") {
  TEST_CASE("symbolic closed forms") {
    const auto r = build_fiber_sum(Mode::symbolic());
    CHECK(r.manifold.c2().as_poly() == kSumC2);
    CHECK(r.manifold.c1sq().as_poly() == kSumC1sq);
    CHECK(r.manifold.chi_h().as_poly() == kSumChi);
    CHECK(r.manifold.sigma.as_poly() == kSumSigma);
    CHECK(r.manifold.simply_connected.status == Connectivity::declared_true);
    CHECK(r.manifold.almost_complex);
    CHECK(r.manifold.symplectic);
    CHECK(all_errors_pass(r.checks));
    CHECK(r.all_pass());
  }

  TEST_CASE("c1^2 excess") {
    const Mode m = Mode::symbolic();
    const auto sum = build_fiber_sum(m).manifold;
    const auto x = build_branched_cover(m).manifold;
    const auto y = build_sum_partner(m).manifold;
    CHECK(sum.c1sq() - x.c1sq() - y.c1sq() == Scalar(Poly(8) * (kGenusF - Poly(1))));
  }

  TEST_CASE("table members") {
    const auto k4 = build_fiber_sum(Mode::numeric(4), {.expand_ledger = false}).manifold;
    CHECK(k4.chi_h() == Scalar(7490));
    CHECK(k4.c1sq() == Scalar(63874));
    CHECK(k4.c2() == Scalar(26006));
    CHECK(k4.sigma == Scalar(3954));

    const auto r3 = build_fiber_sum(Mode::numeric(3), {.expand_ledger = false});
    CHECK(r3.manifold.chi_h() == Scalar(1163));
    CHECK(r3.manifold.c1sq() == Scalar(9641));
    CHECK(r3.manifold.c2() == Scalar(4315));
    CHECK(r3.manifold.sigma == Scalar(337));
    bool saw_warning = false;
    for (const auto& c : r3.checks) {
      if (c.name == "table n=3 sigma") {
        saw_warning = true;
        CHECK_FALSE(c.pass);
        CHECK(c.severity == Severity::warning);
        CHECK(c.expected == "227");
        CHECK(c.got == "337");
        CHECK(c.note.find("337") != std::string::npos);
      }
    }
    CHECK(saw_warning);
    CHECK(r3.all_pass());
  }

  TEST_CASE("smallest member has negative signature") {
    CHECK(build_fiber_sum(Mode::numeric(2), {.expand_ledger = false}).manifold.sigma == Scalar(-30));
  }

  TEST_CASE("large n stays exact") {
    const auto k = build_fiber_sum(Mode::numeric(100), {.expand_ledger = false}).manifold;
    CHECK(k.c2() == Scalar(Rational(kSumC2(100))));
    CHECK(k.c2().number().numerator() > Integer("100000000000000"));
  }

  TEST_CASE("ledger too large to expand") {
    const auto k = build_fiber_sum(Mode::numeric(9)).manifold;
    REQUIRE(k.sw.has_value());
    CHECK_FALSE(k.sw->value.has_value());
  }

  TEST_CASE("ratio limit") {
    const auto r = bmy_report(build_fiber_sum(Mode::symbolic()).manifold);
    CHECK(r.ratio == Rational(9));
    CHECK(r.ratio_is_limit);
  }
}

TEST_SUITE("verification") {
  TEST_CASE("full run passes with one warning") {
    const auto checks = verify_construction();
    CHECK(verification_passes(checks));
    int warnings = 0;
    for (const auto& c : checks) {
      if (!c.pass) {
        CHECK(c.severity == Severity::warning);
        ++warnings;
      }
    }
    CHECK(warnings == 1);
  }
}

TEST_SUITE("exotic family") {
  TEST_CASE("n = 3, five of each") {
    const auto report = exotic_family(3, 5);
    CHECK(report.entries.size() == 10);
    CHECK(report.count(SymplecticClass::symplectic) == 5);
    CHECK(report.count(SymplecticClass::non_symplectic) == 5);
    CHECK(report.pairwise_distinct);
    CHECK(report.differ_from_base);
  }

  TEST_CASE("unknot injected") {
    const auto report = exotic_family(3, 1, true);
    CHECK(report.entries.size() == 3);
    CHECK_FALSE(report.notes.empty());
  }

  TEST_CASE("n = 2, one hundred torus knots") {
    const auto report = exotic_family(2, 100);
    std::size_t monic = 0;
    for (const auto& e : report.entries)
      if (e.cls == SymplecticClass::symplectic && is_monic_symmetric(e.sw)) ++monic;
    CHECK(monic == 100);
    CHECK(report.collisions == 0);
  }
}
