#include "fourgeo/knots/knot.hpp"

#include <numeric>

#include "fourgeo/kernels/ledger.hpp"

namespace fourgeo {

std::string Knot::describe() const {
  switch (kind) {
    case KnotKind::torus: return "torus(" + p.to_string() + ", " + q.to_string() + ")";
    case KnotKind::twist: return "twist(" + std::to_string(twists) + ")";
    case KnotKind::unknot: break;
  }
  return "unknot";
}

bool Knot::monic() const {
  if (!alexander) throw Error("Alexander polynomial of " + describe() + " is not expanded");
  return is_monic_symmetric(*alexander);
}

std::string to_string(SymplecticClass cls) {
  switch (cls) {
    case SymplecticClass::symplectic: return "symplectic";
    case SymplecticClass::non_symplectic: return "non-symplectic";
    case SymplecticClass::undetermined: break;
  }
  return "undetermined";
}

LaurentPoly normalize_alexander(const LaurentPoly& a) {
  if (a.is_zero()) throw Error("zero is not an Alexander polynomial");
  const long span = a.max_exponent() - a.min_exponent();
  if (span % 2 != 0) throw Error("Alexander polynomial with odd span " + a.to_string());
  LaurentPoly out = a.shifted(-(a.min_exponent() + span / 2));
  if (out.leading_coefficient() < 0) out = -out;
  return out;
}

LaurentPoly torus_alexander(long p, long q) {
  const LaurentPoly one(1);
  auto binomial = [&](long k) { return LaurentPoly::monomial(1, k) - one; };
  const LaurentPoly numerator = binomial(p * q) * binomial(1);
  // Two exact divisions by sparse binomials keep this linear in pq.
  auto step = numerator.divide_exact(binomial(p));
  if (step) step = step->divide_exact(binomial(q));
  if (!step) throw Error("torus(" + std::to_string(p) + ", " + std::to_string(q) +
                         "): Alexander quotient is not exact");
  return normalize_alexander(*step);
}

Knot unknot() {
  Knot k;
  k.genus = Scalar(0);
  k.alexander = LaurentPoly(1);
  k.fibered = true;
  return k;
}

Knot torus_knot(long p, long q) {
  if (p < 2 || q < 2) throw Error("torus(" + std::to_string(p) + ", " + std::to_string(q) +
                                  "): parameters must be at least 2");
  if (std::gcd(p, q) != 1)
    throw Error("torus(" + std::to_string(p) + ", " + std::to_string(q) + ") is not a knot");
  Knot k;
  k.kind = KnotKind::torus;
  k.p = Scalar(p);
  k.q = Scalar(q);
  const long genus = (p - 1) * (q - 1) / 2;
  k.genus = Scalar(genus);
  if (genus <= kMaxExpandedGenus) k.alexander = torus_alexander(p, q);
  k.fibered = true;
  return k;
}

Knot find_fibered_knot_of_genus(const Scalar& g, bool expand) {
  if (!g.is_integer_valued() || !certify_nonnegative(g))
    throw Error("knot genus must be a nonnegative integer, got " + g.to_string());
  if (g.is_zero()) return unknot();
  if (expand && !g.is_symbolic()) {
    const Integer value = g.number().to_integer();
    if (value <= kMaxExpandedGenus) return torus_knot(2, 2 * value.get_si() + 1);
  }
  Knot k;
  k.kind = KnotKind::torus;
  k.p = Scalar(2);
  k.q = Scalar(2) * g + Scalar(1);
  k.genus = g;
  k.fibered = true;
  return k;
}

Knot twist_knot(long m) {
  if (m < 1) throw Error("twist(" + std::to_string(m) + "): parameter must be positive");
  Knot k;
  k.kind = KnotKind::twist;
  k.twists = m;
  k.genus = Scalar(1);
  k.alexander = LaurentPoly::from_terms({{1, m}, {0, -(2 * m + 1)}, {-1, m}});
  k.fibered = m == 1;
  return k;
}

std::vector<Knot> nonfibered_nonmonic_family(int count) {
  if (count < 1) throw Error("family size must be at least 1");
  std::vector<Knot> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int m = 2; m <= count + 1; ++m) out.push_back(twist_knot(m));
  return out;
}

namespace {

std::string pick_torus(const ManifoldRecord& m, const std::string& requested) {
  if (requested.empty()) {
    if (m.surgery_tori.empty())
      throw Error("knot surgery on '" + m.name + "': no square-zero torus available");
    return m.surgery_tori.front();
  }
  if (!m.has_torus(requested))
    throw Error("knot surgery on '" + m.name + "': no surgery torus '" + requested + "'");
  return requested;
}

}  // namespace

ManifoldRecord knot_surgery(const ManifoldRecord& m, const Knot& k,
                            const KnotSurgeryOptions& options) {
  if (!m.sw) throw Error("knot surgery on '" + m.name + "': record carries no SW ledger");
  const std::string torus = pick_torus(m, options.torus);

  ManifoldRecord out = m;
  out.symplectic = m.symplectic && k.fibered;
  if (out.sw->value && k.alexander)
    out.sw->value = *out.sw->value * k.alexander->substitute_square();
  else
    out.sw->value.reset();
  out.sw->provenance.push_back("knot surgery along " + torus + " with " + k.describe() +
                               ": SW *= Delta(t^2) (Fintushel-Stern rule)");

  if (!options.graft.empty()) {
    MarkedSurface s = m.surface(options.graft);
    s.genus = s.genus + k.genus;
    out.marked_surfaces[options.graft] = s;
  }
  out.log.push_back("knot_surgery(" + k.describe() + ") along " + torus +
                    (options.graft.empty() ? "" : ", grafting onto " + options.graft));
  return out;
}

std::size_t FamilyReport::count(SymplecticClass cls) const {
  std::size_t c = 0;
  for (const auto& e : entries)
    if (e.cls == cls) ++c;
  return c;
}

FamilyReport distinguish_family(const ManifoldRecord& base, std::span<const Knot> knots,
                                const std::string& torus) {
  if (!base.sw || !base.sw->value)
    throw Error("distinguish_family: '" + base.name + "' has no expanded SW ledger");
  pick_torus(base, torus);

  std::vector<LaurentPoly> alexanders;
  alexanders.reserve(knots.size());
  for (const auto& k : knots) {
    if (!k.alexander)
      throw Error("distinguish_family: Alexander polynomial of " + k.describe() + " not expanded");
    alexanders.push_back(*k.alexander);
  }

  FamilyReport report;
  report.base_sw = *base.sw->value;
  std::vector<LaurentPoly> ledgers = kernels::surgery_ledgers(report.base_sw, alexanders);
  report.collisions = kernels::count_collisions(ledgers);
  report.pairwise_distinct = report.collisions == 0;

  for (std::size_t i = 0; i < knots.size(); ++i) {
    FamilyEntry entry{knots[i], std::move(ledgers[i])};
    entry.trivial = alexanders[i] == LaurentPoly(1);
    if (knots[i].fibered && base.symplectic)
      entry.cls = SymplecticClass::symplectic;
    else if (!is_monic_symmetric(alexanders[i]))
      entry.cls = SymplecticClass::non_symplectic;
    if (entry.trivial)
      report.notes.push_back(knots[i].describe() + ": trivial Alexander polynomial, no exotic pair");
    else if (entry.sw == report.base_sw)
      report.differ_from_base = false;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace fourgeo
