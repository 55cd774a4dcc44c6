#include <string>

#include "fourgeo/calculus/blocks.hpp"
#include "fourgeo/kernels/geography.hpp"
#include "fourgeo/pipeline/pipeline.hpp"

namespace fourgeo {

namespace {

constexpr long kScanMax = 50;

void append(std::vector<Check>& out, const std::vector<Check>& more, const std::string& prefix) {
  for (Check c : more) {
    c.name = prefix + c.name;
    out.push_back(std::move(c));
  }
}

bool same_invariants(const ManifoldRecord& numeric, const ManifoldRecord& symbolic, long n) {
  const Rational at(n);
  return numeric.e == symbolic.e.evaluate(at) && numeric.sigma == symbolic.sigma.evaluate(at);
}

}  // namespace

std::vector<Check> verify_construction() {
  std::vector<Check> checks;
  const Mode symbolic = Mode::symbolic();
  const PipelineReport cover = build_branched_cover(symbolic);
  const PipelineReport partner = build_sum_partner(symbolic);
  const PipelineReport sum = build_fiber_sum(symbolic);

  // The fiber-sum report already carries the cover, fiber and partner checks.
  append(checks, sum.checks, "symbolic: ");
  checks.push_back(Check::boolean("symbolic: sum declared simply connected",
                                  sum.manifold.simply_connected.status == Connectivity::declared_true));
  for (const auto* m : {&cover.manifold, &partner.manifold, &sum.manifold})
    checks.push_back(Check::boolean("integer-valued chi_h(" + m->name + ") = " + m->chi_h().to_string(),
                                    integer_valued(m->chi_h().as_poly())));

  for (const auto& row : kPublishedTable) {
    const PipelineReport numeric = build_fiber_sum(Mode::numeric(row.n), {.expand_ledger = false});
    for (const auto& c : numeric.checks)
      if (c.name.rfind("table", 0) == 0) checks.push_back(c);
  }

  const BmyReport limit = bmy_report(sum.manifold);
  checks.push_back(Check::compare("c1^2/chi_h limit", Scalar(9), Scalar(limit.ratio)));

  const auto rows = kernels::geography_scan(kParameterMin, kScanMax);
  bool numeric_matches = true;
  bool chi_integral = true;
  bool below_line = true;
  bool sign_pattern = true;
  bool increasing = true;
  std::string first_mismatch;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const Rational at(r.n);
    const ManifoldRecord& m = sum.manifold;
    if (Scalar(Rational(r.e)) != m.e.evaluate(at) || Scalar(Rational(r.sigma)) != m.sigma.evaluate(at) ||
        Scalar(Rational(r.chi_h)) != m.chi_h().evaluate(at)) {
      numeric_matches = false;
      if (first_mismatch.empty()) first_mismatch = "n = " + std::to_string(r.n);
    }
    if (!m.chi_h().evaluate(at).is_integer_valued()) chi_integral = false;
    if (r.bmy_gap <= 0) below_line = false;
    if ((r.sigma > 0) != (r.n >= 3)) sign_pattern = false;
    if (i > 0 && r.n > 3 && !(rows[i - 1].ratio < r.ratio)) increasing = false;
  }
  for (long n = kParameterMin; n <= kScanMax; ++n) {
    const Mode mode = Mode::numeric(n);
    if (!same_invariants(build_branched_cover(mode).manifold, cover.manifold, n) ||
        !same_invariants(build_sum_partner(mode, {.expand_ledger = false}).manifold,
                         partner.manifold, n)) {
      numeric_matches = false;
      if (first_mismatch.empty()) first_mismatch = "n = " + std::to_string(n);
    }
  }
  const std::string range = " for n = 2..50";
  checks.push_back(Check::boolean("numeric builds equal symbolic builds" + range, numeric_matches,
                                  "true", numeric_matches ? "true" : "mismatch at " + first_mismatch));
  checks.push_back(Check::boolean("chi_h(sum) integral" + range, chi_integral));
  checks.push_back(Check::boolean("B-M-Y gap > 0" + range, below_line));
  checks.push_back(Check::boolean("sigma(sum) > 0 iff n >= 3" + range, sign_pattern));
  checks.push_back(Check::boolean("c1^2/chi_h strictly increasing for n = 3..50", increasing));
  const Rational last = rows.back().ratio;
  checks.push_back(Check::boolean("c1^2/chi_h at n = 50 exceeds 8.99",
                                  last > Rational(Integer(899), Integer(100)), "> 8.99",
                                  to_decimal(last, 6)));
  checks.push_back(Check::compare("sigma at n = 2", Scalar(-30), Scalar(Rational(rows.front().sigma))));
  return checks;
}

FamilyReport exotic_family(long n, int count, bool include_unknot) {
  if (count < 1) throw Error("family size must be at least 1");
  const PipelineReport sum = build_fiber_sum(Mode::numeric(n));
  std::vector<Knot> knots;
  if (include_unknot) knots.push_back(unknot());
  for (long k = 1; k <= count; ++k) knots.push_back(torus_knot(2, 2 * k + 1));
  for (auto& k : nonfibered_nonmonic_family(count)) knots.push_back(std::move(k));
  return distinguish_family(sum.manifold, knots, blocks::kComplementTorus);
}

}  // namespace fourgeo
