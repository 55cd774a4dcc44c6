#pragma once

#include <span>
#include <string>

#include "fourgeo/calculus/manifold.hpp"

namespace fourgeo {

/// Record with the given Euler characteristic and signature.
ManifoldRecord mk_manifold(const Scalar& e, const Scalar& sigma, std::string name = {});

/// Connected sum with k copies of the negatively oriented CP^2.
ManifoldRecord blow_up(const ManifoldRecord& m, const Scalar& k);
/// blow_up, with all k points chosen on the named marked surface.
ManifoldRecord blow_up_on_surface(const ManifoldRecord& m, const Scalar& k,
                                  const std::string& surface);

/// Proper transform of a surface through `points` blown-up points.
MarkedSurface surface_blowup(const MarkedSurface& s, const Scalar& points);

/// Aggregate description of a branch divisor with pairwise disjoint
/// components, each branched with the same index.
struct BranchData {
  Scalar e_branch;  // Euler characteristic of the whole divisor
  Scalar d_sq;      // D.D
  Scalar k_dot_d;   // K.D
  Scalar degree;    // d
  Scalar index;     // m
};

/// Branch data of the lattice-curve configuration on the n^4-fold blow-up of
/// the torus product: four families of n^2 disjoint elliptic curves, each
/// curve through n^2 blown-up points.
BranchData hirzebruch_preset(const Scalar& n);

/// Degree-d cover branched along D with index m. Uses
///   e'    = d (e - e_D) + (d/m) e_D
///   c1^2' = d (K + (1 - 1/m) D)^2
/// and recovers the signature from (e', c1^2'). The result is flagged almost
/// complex, so its chi_h must be integral.
ManifoldRecord branched_cover(const ManifoldRecord& m, const BranchData& b);

/// Euler characteristic of a degree-d cover of a curve, branched with
/// index m over `branch_points` points.
Scalar riemann_hurwitz(const Scalar& e_base, const Scalar& branch_points, const Scalar& degree,
                       const Scalar& index);

struct SurfaceComponent {
  Scalar euler;
  Scalar count = Scalar(1);
};

/// Euler characteristic of a union of surfaces meeting transversally in
/// `intersection_points` points, each point on exactly two components.
Scalar euler_of_union(std::span<const SurfaceComponent> components,
                      const Scalar& intersection_points);

/// g = 1 - e/2; e must be even.
Scalar genus_from_euler(const Scalar& e);

/// Smoothing k positive transverse intersections of two surfaces.
MarkedSurface resolve_surfaces(const MarkedSurface& a, const MarkedSurface& b, const Scalar& k,
                               std::string name = "F");

/// Reasons supplied by the caller for declaring the fiber sum simply
/// connected. Both must be present for a declared-true result.
struct FiberSumJustification {
  std::string left_surjective;      // pi1(F) -> pi1(X) onto
  std::string right_complement;     // pi1(Y \ F') trivial
};

/// Symplectic (Gompf) sum along surfaces of equal genus and opposite square:
/// e = e_X + e_Y + 4g - 4, sigma = sigma_X + sigma_Y.
ManifoldRecord fiber_sum(const ManifoldRecord& x, const MarkedSurface& fx, const ManifoldRecord& y,
                         const MarkedSurface& fy, const FiberSumJustification& why = {});

enum class BmySide { below, on, above };

struct BmyReport {
  /// c1^2 / chi_h for numbers; ratio of leading coefficients (the limit as
  /// n grows) for polynomials.
  Rational ratio;
  bool ratio_is_limit = false;
  Scalar gap;  // 9 chi_h - c1^2
  /// Eventual side for polynomials.
  BmySide side = BmySide::on;
};

/// Position relative to the line c1^2 = 9 chi_h.
BmyReport bmy_report(const ManifoldRecord& m);

std::string to_string(BmySide side);

}  // namespace fourgeo
