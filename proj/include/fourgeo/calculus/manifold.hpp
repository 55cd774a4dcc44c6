#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fourgeo/algebra/laurent.hpp"
#include "fourgeo/calculus/scalar.hpp"

namespace fourgeo {

/// Embedded surface descriptor.
struct MarkedSurface {
  std::string name;
  Scalar genus;
  Scalar self_int;

  Scalar euler() const { return Scalar(2) - Scalar(2) * genus; }
  friend bool operator==(const MarkedSurface&, const MarkedSurface&) = default;
};

enum class Connectivity { unknown, declared_true, declared_false };

/// Simple connectivity is never computed; it is declared with a reason.
struct SimpleConnectivity {
  Connectivity status = Connectivity::unknown;
  std::string justification;

  static SimpleConnectivity declared(bool value, std::string why) {
    return {value ? Connectivity::declared_true : Connectivity::declared_false, std::move(why)};
  }
  friend bool operator==(const SimpleConnectivity&, const SimpleConnectivity&) = default;
};

/// Seiberg-Witten bookkeeping relative to one distinguished torus class.
/// `value` is empty when a factor was too large to expand (the provenance
/// still records every step).
struct SWLedger {
  std::optional<LaurentPoly> value;
  std::vector<std::string> provenance;
};

/// Characteristic data of a closed oriented 4-manifold plus the structure the
/// surgery operations need. Derived numbers are computed, never stored.
struct ManifoldRecord {
  std::string name;
  Scalar e;
  Scalar sigma;
  SimpleConnectivity simply_connected;
  bool almost_complex = false;
  bool symplectic = false;
  std::vector<std::string> log;
  std::map<std::string, MarkedSurface> marked_surfaces;
  std::optional<SWLedger> sw;
  /// Square-zero tori available for knot surgery.
  std::vector<std::string> surgery_tori;
  /// Declared, unproven facts the construction relies on.
  std::vector<std::string> assumptions;

  Scalar c2() const { return e; }
  Scalar c1sq() const { return Scalar(3) * sigma + Scalar(2) * e; }
  Scalar chi_h() const { return (sigma + e) / Scalar(4); }

  const MarkedSurface& surface(const std::string& surface_name) const;
  bool has_torus(const std::string& torus) const;
};

std::string to_string(Connectivity c);

}  // namespace fourgeo
