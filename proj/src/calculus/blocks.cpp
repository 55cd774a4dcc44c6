#include "fourgeo/calculus/blocks.hpp"

#include "fourgeo/calculus/surgery.hpp"

namespace fourgeo::blocks {

ManifoldRecord t4() {
  ManifoldRecord m = mk_manifold(Scalar(0), Scalar(0), "T4");
  m.simply_connected = SimpleConnectivity::declared(false, "pi1(T^4) = Z^4");
  m.almost_complex = true;
  m.symplectic = true;
  return m;
}

ManifoldRecord cp2() {
  ManifoldRecord m = mk_manifold(Scalar(3), Scalar(1), "CP2");
  m.simply_connected = SimpleConnectivity::declared(true, "CP^2 is simply connected");
  m.almost_complex = true;
  m.symplectic = true;
  return m;
}

ManifoldRecord cp2bar() {
  ManifoldRecord m = mk_manifold(Scalar(3), Scalar(-1), "CP2BAR");
  m.simply_connected = SimpleConnectivity::declared(true, "CP^2 is simply connected");
  return m;
}

ManifoldRecord e2() {
  ManifoldRecord m = mk_manifold(Scalar(24), Scalar(-16), "E2");
  m.simply_connected = SimpleConnectivity::declared(true, "E(2) is a simply connected elliptic surface");
  m.almost_complex = true;
  m.symplectic = true;
  m.marked_surfaces.emplace(kSection, MarkedSurface{kSection, Scalar(0), Scalar(-2)});
  m.sw = SWLedger{LaurentPoly(1), {"E(2): SW = 1 on the fiber class"}};
  m.surgery_tori = {kCuspFiberTorus, kComplementTorus};
  m.assumptions.push_back(
      "the c-embedded torus in the Milnor fiber E(2) \\ N(2) stays intact under surgeries "
      "performed inside the nucleus");
  return m;
}

}  // namespace fourgeo::blocks
