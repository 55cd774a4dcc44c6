#pragma once

#include <vector>

#include "fourgeo/algebra/rational.hpp"
#include "fourgeo/calculus/surgery.hpp"

// Geography scans over the construction parameter. Every n is independent,
// so the OpenMP kernel fans out over n and writes rows by index; the serial
// scan is the reference it must reproduce exactly.
namespace fourgeo::kernels {

struct GeographyRow {
  long n = 0;
  Integer e;
  Integer sigma;
  Integer c1sq;
  Integer chi_h;
  Rational ratio;   // c1^2 / chi_h, exact
  Integer bmy_gap;  // 9 chi_h - c1^2
  BmySide side = BmySide::on;

  friend bool operator==(const GeographyRow&, const GeographyRow&) = default;
};

/// Numeric build of the n-th fiber sum.
GeographyRow geography_row(long n);

std::vector<GeographyRow> geography_scan_serial(long n_min, long n_max);
std::vector<GeographyRow> geography_scan(long n_min, long n_max);

}  // namespace fourgeo::kernels
