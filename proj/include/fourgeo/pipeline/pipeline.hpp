#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fourgeo/calculus/manifold.hpp"
#include "fourgeo/knots/knot.hpp"

namespace fourgeo {

/// Evaluation mode: every quantity is a polynomial in n, or a number at a
/// fixed n >= 2.
class Mode {
 public:
  static Mode symbolic() { return Mode(); }
  /// Throws for n < 2: the lattice construction degenerates at n = 1.
  static Mode numeric(long n);

  bool is_symbolic() const { return !n_.has_value(); }
  long n() const;
  /// n as a polynomial, or its numeric value.
  Scalar parameter() const;
  /// A closed-form expectation in this mode.
  Scalar fix(const Poly& formula) const;
  std::string describe() const;

 private:
  Mode() = default;
  std::optional<long> n_;
};

enum class Severity { error, warning };

struct Check {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
  std::string note;
  /// A failing warning is reported but does not fail verification.
  Severity severity = Severity::error;

  static Check compare(std::string name, const Scalar& expected, const Scalar& got);
  static Check boolean(std::string name, bool ok, std::string expected = "true",
                       std::string got = {});
};

struct FiberData {
  Scalar e_reg;      // regular fiber of the torus fibration
  Scalar g_reg;
  Scalar e_sing;     // singular fiber
  Scalar e_ltilde;   // branched cover of one exceptional sphere
};

struct PipelineReport {
  ManifoldRecord manifold;
  std::optional<FiberData> fiber_data;
  Scalar intersections;
  std::vector<Check> checks;

  /// True when no error-severity check failed.
  bool all_pass() const;
};

struct PipelineOptions {
  /// Expand the SW ledger (the Alexander polynomial of the genus-g(F) torus
  /// knot). Geography scans switch it off.
  bool expand_ledger = true;
};

struct ResolvedFiber {
  MarkedSurface surface;
  Scalar intersections;
  std::vector<Check> checks;
};

/// Branched cover of T^4 # n^4 CP2bar over the lattice curves.
PipelineReport build_branched_cover(const Mode& mode);
/// Resolution of two transverse regular fibers of the cover.
ResolvedFiber build_resolved_fiber(const Mode& mode);
/// E(2) # (2n^3 - 2) CP2bar after fibered knot surgery, carrying F' = C # Sigma_g.
PipelineReport build_sum_partner(const Mode& mode, const PipelineOptions& options = {});
/// Fiber sum of the branched cover and its partner along F and F'.
PipelineReport build_fiber_sum(const Mode& mode, const PipelineOptions& options = {});

/// Name of the marked surface F' on the partner.
inline constexpr const char* kPartnerSurface = "section";

/// Published invariants of the two smallest members.
struct TableEntry {
  long n;
  long chi_h;
  long c1sq;
  long c2;
  long sigma;
};
inline constexpr TableEntry kPublishedTable[] = {
    {3, 1163, 9641, 4315, 227},
    {4, 7490, 63874, 26006, 3954},
};

/// Every identity and table entry of the construction, plus scans over
/// n = 2..50. Failures are reported, never thrown.
std::vector<Check> verify_construction();
bool verification_passes(const std::vector<Check>& checks);

/// Surgeries on the complement torus of the n-th fiber sum with `count`
/// torus knots torus(2, 2k+1) and `count` twist knots.
FamilyReport exotic_family(long n, int count, bool include_unknot = false);

}  // namespace fourgeo
