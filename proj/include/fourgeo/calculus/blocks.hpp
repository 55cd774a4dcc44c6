#pragma once

#include "fourgeo/calculus/manifold.hpp"

namespace fourgeo::blocks {

/// Regular fiber in a cusp neighborhood of the nucleus.
inline constexpr const char* kCuspFiberTorus = "cusp-fiber";
/// c-embedded torus in the Milnor fiber complementing the nucleus.
inline constexpr const char* kComplementTorus = "complement-torus";
/// Section of the elliptic fibration of E(2).
inline constexpr const char* kSection = "section";

ManifoldRecord t4();
ManifoldRecord cp2();
ManifoldRecord cp2bar();
/// K3 surface with its elliptic fibration: a (-2)-section, two surgery tori,
/// and SW ledger 1.
ManifoldRecord e2();

}  // namespace fourgeo::blocks
