#include "fourgeo/calculus/surgery.hpp"

#include <algorithm>

namespace fourgeo {

const MarkedSurface& ManifoldRecord::surface(const std::string& surface_name) const {
  auto it = marked_surfaces.find(surface_name);
  if (it == marked_surfaces.end())
    throw Error("manifold '" + name + "' has no marked surface '" + surface_name + "'");
  return it->second;
}

bool ManifoldRecord::has_torus(const std::string& torus) const {
  return std::find(surgery_tori.begin(), surgery_tori.end(), torus) != surgery_tori.end();
}

std::string to_string(Connectivity c) {
  switch (c) {
    case Connectivity::declared_true: return "declared simply connected";
    case Connectivity::declared_false: return "declared not simply connected";
    case Connectivity::unknown: break;
  }
  return "unknown";
}

std::string to_string(BmySide side) {
  switch (side) {
    case BmySide::below: return "below";
    case BmySide::above: return "above";
    case BmySide::on: break;
  }
  return "on";
}

namespace {

void require_count(const Scalar& k, const std::string& what) {
  if (!k.is_integer_valued()) throw Error(what + " must be an integer, got " + k.to_string());
  if (!certify_nonnegative(k)) throw Error(what + " must be nonnegative, got " + k.to_string());
}

void require_positive_count(const Scalar& k, const std::string& what) {
  if (!k.is_integer_valued()) throw Error(what + " must be an integer, got " + k.to_string());
  if (!certify_positive(k)) throw Error(what + " must be positive, got " + k.to_string());
}

/// d/m, checked to be an integer (integer valued when symbolic).
Scalar sheet_count(const Scalar& degree, const Scalar& index) {
  require_positive_count(degree, "cover degree");
  require_positive_count(index, "branching index");
  Scalar q;
  try {
    q = degree / index;
  } catch (const Error&) {
    throw Error("branching index " + index.to_string() + " does not divide degree " +
                degree.to_string());
  }
  if (!q.is_integer_valued())
    throw Error("branching index " + index.to_string() + " does not divide degree " +
                degree.to_string());
  return q;
}

void check_almost_complex(const ManifoldRecord& m, const std::string& op) {
  if (!m.almost_complex) return;
  if (!m.chi_h().is_integer_valued())
    throw Error(op + ": chi_h = " + m.chi_h().to_string() +
                " is not integral on an almost complex manifold");
}

}  // namespace

ManifoldRecord mk_manifold(const Scalar& e, const Scalar& sigma, std::string name) {
  ManifoldRecord m;
  m.name = std::move(name);
  m.e = e;
  m.sigma = sigma;
  m.log.push_back("manifold(e = " + e.to_string() + ", sigma = " + sigma.to_string() + ")");
  return m;
}

ManifoldRecord blow_up(const ManifoldRecord& m, const Scalar& k) {
  require_count(k, "blow-up count");
  ManifoldRecord out = m;
  out.e = m.e + k;
  out.sigma = m.sigma - k;
  out.log.push_back("blow_up(" + k.to_string() + ")");
  return out;
}

ManifoldRecord blow_up_on_surface(const ManifoldRecord& m, const Scalar& k,
                                  const std::string& surface) {
  MarkedSurface transformed = surface_blowup(m.surface(surface), k);
  ManifoldRecord out = blow_up(m, k);
  out.marked_surfaces[surface] = std::move(transformed);
  out.log.back() += " on " + surface;
  return out;
}

MarkedSurface surface_blowup(const MarkedSurface& s, const Scalar& points) {
  require_count(points, "blown-up point count");
  return {s.name, s.genus, s.self_int - points};
}

BranchData hirzebruch_preset(const Scalar& n) {
  const Scalar n2 = n * n;
  const Scalar n4 = n2 * n2;
  return {
      .e_branch = Scalar(0),
      .d_sq = Scalar(-4) * n4,
      .k_dot_d = Scalar(4) * n4,
      .degree = n2 * n,
      .index = n,
  };
}

ManifoldRecord branched_cover(const ManifoldRecord& m, const BranchData& b) {
  const Scalar& d = b.degree;
  const Scalar& idx = b.index;
  const Scalar sheets_over_branch = sheet_count(d, idx);

  // Multiply through by m^2 so lambda = 1 - 1/m never leaves the polynomials.
  const Scalar idx_minus_one = idx - Scalar(1);
  const Scalar scaled = d * idx * idx * m.c1sq() + Scalar(2) * d * idx * idx_minus_one * b.k_dot_d +
                        d * idx_minus_one * idx_minus_one * b.d_sq;
  Scalar c1sq;
  try {
    c1sq = scaled / (idx * idx);
  } catch (const Error&) {
    throw Error("inconsistent branch data: c1^2 of the cover is not polynomial in n");
  }

  ManifoldRecord out;
  out.name = m.name.empty() ? "cover" : "cover of " + m.name;
  out.e = d * (m.e - b.e_branch) + sheets_over_branch * b.e_branch;
  const Scalar sigma3 = c1sq - Scalar(2) * out.e;
  out.sigma = sigma3 / Scalar(3);
  if (!out.sigma.is_integer_valued())
    throw Error("inconsistent branch data: signature " + out.sigma.to_string() +
                " is not integral");
  out.almost_complex = true;
  out.symplectic = m.symplectic;
  out.log = m.log;
  out.log.push_back("branched_cover(degree = " + d.to_string() + ", index = " + idx.to_string() +
                    ")");
  try {
    check_almost_complex(out, "branched_cover");
  } catch (const Error& err) {
    throw Error(std::string("inconsistent branch data: ") + err.what());
  }
  return out;
}

Scalar riemann_hurwitz(const Scalar& e_base, const Scalar& branch_points, const Scalar& degree,
                       const Scalar& index) {
  const Scalar sheets = sheet_count(degree, index);
  return degree * (e_base - branch_points) + sheets * branch_points;
}

Scalar euler_of_union(std::span<const SurfaceComponent> components,
                      const Scalar& intersection_points) {
  Scalar total;
  for (const auto& c : components) total += c.count * c.euler;
  return total - intersection_points;
}

Scalar genus_from_euler(const Scalar& e) {
  const Scalar half = e / Scalar(2);
  if (!half.is_integer_valued()) throw Error("odd Euler characteristic " + e.to_string());
  Scalar g = Scalar(1) - half;
  if (!certify_nonnegative(g))
    throw Error("Euler characteristic " + e.to_string() + " exceeds 2; no closed surface");
  return g;
}

MarkedSurface resolve_surfaces(const MarkedSurface& a, const MarkedSurface& b, const Scalar& k,
                               std::string name) {
  if (!k.is_integer_valued() || !certify_positive(k))
    throw Error("resolution needs at least one intersection, got k = " + k.to_string());
  return {std::move(name), a.genus + b.genus + k - Scalar(1), a.self_int + b.self_int + Scalar(2) * k};
}

ManifoldRecord fiber_sum(const ManifoldRecord& x, const MarkedSurface& fx, const ManifoldRecord& y,
                         const MarkedSurface& fy, const FiberSumJustification& why) {
  if (!(fx.genus == fy.genus))
    throw Error("fiber sum genus mismatch: g(" + fx.name + ") = " + fx.genus.to_string() +
                ", g(" + fy.name + ") = " + fy.genus.to_string());
  if (!(fx.self_int + fy.self_int).is_zero())
    throw Error("fiber sum squares do not cancel: [" + fx.name + "]^2 = " +
                fx.self_int.to_string() + ", [" + fy.name + "]^2 = " + fy.self_int.to_string());

  ManifoldRecord out;
  out.name = x.name + " #_" + fx.name + " " + y.name;
  out.e = x.e + y.e + Scalar(4) * fx.genus - Scalar(4);
  out.sigma = x.sigma + y.sigma;
  out.almost_complex = x.almost_complex && y.almost_complex;
  out.symplectic = x.symplectic && y.symplectic;
  if (!why.left_surjective.empty() && !why.right_complement.empty())
    out.simply_connected = SimpleConnectivity::declared(
        true, why.left_surjective + "; " + why.right_complement + "; Seifert-Van Kampen");

  for (const auto& entry : x.log) out.log.push_back("[" + x.name + "] " + entry);
  for (const auto& entry : y.log) out.log.push_back("[" + y.name + "] " + entry);
  out.log.push_back("fiber_sum along " + fx.name + " / " + fy.name + " (genus " +
                    fx.genus.to_string() + ")");

  for (const auto& [key, s] : x.marked_surfaces)
    if (key != fx.name) out.marked_surfaces.emplace(key, s);
  for (const auto& [key, s] : y.marked_surfaces)
    if (key != fy.name) out.marked_surfaces.emplace(key, s);

  if (const auto& carried = y.sw ? y.sw : x.sw) {
    out.sw = carried;
    out.sw->provenance.push_back("carried through fiber sum from " + (y.sw ? y.name : x.name));
  }
  out.surgery_tori = x.surgery_tori;
  for (const auto& t : y.surgery_tori)
    if (!out.has_torus(t)) out.surgery_tori.push_back(t);
  out.assumptions = x.assumptions;
  out.assumptions.insert(out.assumptions.end(), y.assumptions.begin(), y.assumptions.end());

  check_almost_complex(out, "fiber_sum");
  return out;
}

BmyReport bmy_report(const ManifoldRecord& m) {
  const Scalar chi = m.chi_h();
  if (chi.is_zero()) throw Error("B-M-Y ratio undefined: chi_h = 0");
  const Scalar c1sq = m.c1sq();
  BmyReport r;
  r.gap = Scalar(9) * chi - c1sq;
  if (!chi.is_symbolic() && !c1sq.is_symbolic()) {
    r.ratio = c1sq.number() / chi.number();
  } else {
    const Poly num = c1sq.as_poly();
    const Poly den = chi.as_poly();
    if (num.degree() > den.degree()) throw Error("c1^2 / chi_h diverges as n grows");
    r.ratio = num.degree() < den.degree() ? Rational(0)
                                          : num.leading_coefficient() / den.leading_coefficient();
    r.ratio_is_limit = true;
  }
  const int s = eventual_sign(r.gap);
  r.side = s > 0 ? BmySide::below : (s < 0 ? BmySide::above : BmySide::on);
  return r;
}

}  // namespace fourgeo
