#include "fourgeo/dsl/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace fourgeo::dsl {

namespace {

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string short_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void render_manifold(std::ostringstream& out, const ManifoldRecord& m) {
  out << "c2    = " << m.c2().to_string() << "\n";
  out << "c1^2  = " << m.c1sq().to_string() << "\n";
  out << "chi_h = " << m.chi_h().to_string() << "\n";
  out << "sigma = " << m.sigma.to_string() << "\n";
  out << "simply connected: " << to_string(m.simply_connected.status);
  if (!m.simply_connected.justification.empty()) out << " (" << m.simply_connected.justification << ")";
  out << "\n";
  out << "almost complex: " << yes_no(m.almost_complex) << "\n";
  out << "symplectic: " << yes_no(m.symplectic) << "\n";
  for (const auto& [name, s] : m.marked_surfaces)
    out << "surface " << name << ": genus " << s.genus.to_string() << ", self-intersection "
        << s.self_int.to_string() << "\n";
  for (const auto& t : m.surgery_tori) out << "surgery torus: " << t << "\n";
  if (m.sw) {
    if (!m.sw->value) {
      out << "sw: not expanded\n";
    } else if (m.sw->value->term_count() <= 12) {
      out << "sw: " << m.sw->value->to_string() << "\n";
    } else {
      out << "sw: " << m.sw->value->term_count() << " terms, exponents "
          << m.sw->value->min_exponent() << ".." << m.sw->value->max_exponent() << "\n";
    }
    for (const auto& p : m.sw->provenance) out << "  " << p << "\n";
  }
  for (const auto& a : m.assumptions) out << "assumption: " << a << "\n";
}

}  // namespace

std::string render(const ScriptResult& result, const Mode& mode) {
  std::ostringstream out;
  out << "report " << result.reported << " (" << mode.describe() << ")\n";
  struct Visitor {
    std::ostringstream& out;
    void operator()(const Scalar& s) const { out << "value = " << s.to_string() << "\n"; }
    void operator()(const MarkedSurface& s) const {
      out << "genus = " << s.genus.to_string() << "\n";
      out << "self-intersection = " << s.self_int.to_string() << "\n";
      out << "euler = " << s.euler().to_string() << "\n";
    }
    void operator()(const ManifoldRecord& m) const { render_manifold(out, m); }
    void operator()(const Knot& k) const {
      out << "knot " << k.describe() << ", genus " << k.genus.to_string()
          << (k.fibered ? ", fibered" : ", not fibered") << "\n";
      if (k.alexander) out << "alexander = " << k.alexander->to_string() << "\n";
    }
    void operator()(const Label& l) const { out << "label \"" << l.text << "\"\n"; }
  };
  std::visit(Visitor{out}, result.value);
  return out.str();
}

std::string geography_csv(std::span<const kernels::GeographyRow> rows) {
  std::string out = "n,e,sigma,c1sq,chi_h,ratio,bmy_gap,side\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + r.e.get_str() + "," + r.sigma.get_str() + "," +
           r.c1sq.get_str() + "," + r.chi_h.get_str() + "," + to_decimal(r.ratio, 6) + "," +
           r.bmy_gap.get_str() + "," + to_string(r.side) + "\n";
  }
  return out;
}

std::string geography_svg(std::span<const kernels::GeographyRow> rows) {
  constexpr double width = 720, height = 540, left = 90, right = 30, top = 40, bottom = 60;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  double max_chi = 1, max_c1 = 1;
  for (const auto& r : rows) {
    max_chi = std::max(max_chi, r.chi_h.get_d());
    max_c1 = std::max(max_c1, r.c1sq.get_d());
  }
  max_c1 = std::max(max_c1, 9 * max_chi);
  const double min_c1 = std::min(0.0, [&] {
    double lo = 0;
    for (const auto& r : rows) lo = std::min(lo, r.c1sq.get_d());
    return lo;
  }());
  auto x_of = [&](double chi) { return left + plot_w * chi / max_chi; };
  auto y_of = [&](double c1) { return top + plot_h * (1 - (c1 - min_c1) / (max_c1 - min_c1)); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed2(width) << "\" height=\""
      << fixed2(height) << "\" font-family=\"monospace\" font-size=\"11\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << fixed2(width) << "\" height=\"" << fixed2(height)
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << fixed2(width / 2) << "\" y=\"20\" text-anchor=\"middle\">"
      << "geography (chi_h, c1^2)</text>\n";

  // Axes with five ticks each.
  out << "<line x1=\"" << fixed2(left) << "\" y1=\"" << fixed2(top + plot_h) << "\" x2=\""
      << fixed2(left + plot_w) << "\" y2=\"" << fixed2(top + plot_h) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << fixed2(left) << "\" y1=\"" << fixed2(top) << "\" x2=\"" << fixed2(left)
      << "\" y2=\"" << fixed2(top + plot_h) << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double chi = max_chi * i / 5;
    const double c1 = min_c1 + (max_c1 - min_c1) * i / 5;
    out << "<text x=\"" << fixed2(x_of(chi)) << "\" y=\"" << fixed2(top + plot_h + 16)
        << "\" text-anchor=\"middle\">" << short_number(chi) << "</text>\n";
    out << "<text x=\"" << fixed2(left - 6) << "\" y=\"" << fixed2(y_of(c1) + 4)
        << "\" text-anchor=\"end\">" << short_number(c1) << "</text>\n";
  }
  out << "<text x=\"" << fixed2(left + plot_w / 2) << "\" y=\"" << fixed2(height - 16)
      << "\" text-anchor=\"middle\">chi_h</text>\n";
  out << "<text x=\"16\" y=\"" << fixed2(top + plot_h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << fixed2(top + plot_h / 2) << ")\">c1^2</text>\n";

  for (const int slope : {8, 9}) {
    const double end_chi = std::min(max_chi, max_c1 / slope);
    out << "<line x1=\"" << fixed2(x_of(0)) << "\" y1=\"" << fixed2(y_of(0)) << "\" x2=\""
        << fixed2(x_of(end_chi)) << "\" y2=\"" << fixed2(y_of(slope * end_chi))
        << "\" stroke=\"" << (slope == 9 ? "red" : "gray") << "\" stroke-dasharray=\"4 3\"/>\n";
    out << "<text x=\"" << fixed2(x_of(end_chi) - 4) << "\" y=\"" << fixed2(y_of(slope * end_chi) + 14)
        << "\" text-anchor=\"end\">c1^2 = " << slope << " chi_h</text>\n";
  }

  for (const auto& r : rows) {
    const double x = x_of(r.chi_h.get_d());
    const double y = y_of(r.c1sq.get_d());
    out << "<circle cx=\"" << fixed2(x) << "\" cy=\"" << fixed2(y) << "\" r=\"3\" fill=\"blue\"/>\n";
    out << "<text x=\"" << fixed2(x + 5) << "\" y=\"" << fixed2(y - 5) << "\">n=" << r.n << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string checks_text(std::span<const Check> checks) {
  std::ostringstream out;
  std::size_t failed = 0, warned = 0;
  for (const auto& c : checks) {
    const bool warning = !c.pass && c.severity == Severity::warning;
    out << (c.pass ? "PASS " : warning ? "WARN " : "FAIL ") << c.name;
    if (c.pass)
      out << ": " << c.got << "\n";
    else
      out << ": expected " << c.expected << ", got " << c.got << "\n";
    if (warning) ++warned;
    else if (!c.pass) ++failed;
  }
  if (warned > 0) {
    out << "\nwarnings:\n";
    for (const auto& c : checks) {
      if (c.pass || c.severity != Severity::warning) continue;
      out << "  " << c.name << "\n";
      out << "    printed value:  " << c.expected << "\n";
      out << "    computed value: " << c.got << "\n";
      if (!c.note.empty()) out << "    " << c.note << "\n";
    }
  }
  out << "\n" << checks.size() << " checks, " << failed << " failed, " << warned << " warnings\n";
  return out.str();
}

std::string checks_json(std::span<const Check> checks) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"expected", c.expected},
                   {"got", c.got},
                   {"pass", c.pass},
                   {"note", c.note}});
  }
  return arr.dump(2) + "\n";
}

std::string family_text(const FamilyReport& report, long n) {
  std::ostringstream out;
  out << "knot surgery family on K_" << n << " (base ledger with " << report.base_sw.term_count()
      << " terms)\n";
  for (const auto& e : report.entries) {
    out << "  " << e.knot.describe() << ": " << to_string(e.cls);
    if (e.knot.alexander) out << ", " << (e.knot.monic() ? "monic" : "non-monic");
    out << ", ledger " << e.sw.term_count() << " terms";
    if (e.trivial) out << ", trivial";
    out << "\n";
  }
  out << "symplectic: " << report.count(SymplecticClass::symplectic) << "\n";
  out << "non-symplectic: " << report.count(SymplecticClass::non_symplectic) << "\n";
  out << "collisions: " << report.collisions << "\n";
  out << "pairwise distinct: " << yes_no(report.pairwise_distinct) << "\n";
  out << "all differ from base: " << yes_no(report.differ_from_base) << "\n";
  for (const auto& note : report.notes) out << "note: " << note << "\n";
  return out.str();
}

}  // namespace fourgeo::dsl
