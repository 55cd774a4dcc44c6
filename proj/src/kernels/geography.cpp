#include "fourgeo/kernels/geography.hpp"

#include "fourgeo/pipeline/pipeline.hpp"

namespace fourgeo::kernels {

GeographyRow geography_row(long n) {
  const PipelineReport report = build_fiber_sum(Mode::numeric(n), {.expand_ledger = false});
  const ManifoldRecord& m = report.manifold;
  const BmyReport bmy = bmy_report(m);
  return {
      .n = n,
      .e = m.e.number().to_integer(),
      .sigma = m.sigma.number().to_integer(),
      .c1sq = m.c1sq().number().to_integer(),
      .chi_h = m.chi_h().number().to_integer(),
      .ratio = bmy.ratio,
      .bmy_gap = bmy.gap.number().to_integer(),
      .side = bmy.side,
  };
}

namespace {

void check_range(long n_min, long n_max) {
  if (n_min < kParameterMin) throw Error("scan range must start at n >= 2");
  if (n_max < n_min) throw Error("empty scan range");
}

}  // namespace

std::vector<GeographyRow> geography_scan_serial(long n_min, long n_max) {
  check_range(n_min, n_max);
  std::vector<GeographyRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (long n = n_min; n <= n_max; ++n) rows.push_back(geography_row(n));
  return rows;
}

std::vector<GeographyRow> geography_scan(long n_min, long n_max) {
  check_range(n_min, n_max);
  std::vector<GeographyRow> rows(static_cast<std::size_t>(n_max - n_min + 1));
  const long count = n_max - n_min + 1;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = geography_row(n_min + i);
  return rows;
}

}  // namespace fourgeo::kernels
