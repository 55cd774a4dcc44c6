#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fourgeo/dsl/evaluator.hpp"
#include "fourgeo/dsl/parser.hpp"
#include "fourgeo/dsl/report.hpp"
#include "fourgeo/kernels/geography.hpp"
#include "fourgeo/pipeline/pipeline.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsage = 2;

using namespace fourgeo;

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error("cannot write '" + path + "'");
}

int run_build(const std::string& path, long n, bool numeric) {
  if (numeric && n < kParameterMin) throw UsageError("--n must be at least 2");
  const std::string text = read_file(path);
  dsl::Script script;
  try {
    script = dsl::parse(text);
  } catch (const dsl::ParseError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return kUsage;
  }
  const Mode mode = numeric ? Mode::numeric(n) : Mode::symbolic();
  const dsl::ScriptResult result = dsl::evaluate(script, mode);
  std::cout << dsl::render(result, mode);
  return kPass;
}

int run_verify(bool json) {
  const auto checks = verify_construction();
  std::cout << (json ? dsl::checks_json(checks) : dsl::checks_text(checks));
  return verification_passes(checks) ? kPass : kCheckFailure;
}

int run_geography(long n_min, long n_max, const std::string& csv, const std::string& svg) {
  if (n_min < kParameterMin) throw UsageError("--n-min must be at least 2");
  if (n_max < n_min) throw UsageError("--n-max must not be below --n-min");
  const auto rows = kernels::geography_scan(n_min, n_max);
  const std::string table = dsl::geography_csv(rows);
  if (csv.empty())
    std::cout << table;
  else
    write_file(csv, table);
  if (!svg.empty()) write_file(svg, dsl::geography_svg(rows));
  return kPass;
}

int run_exotic(long n, int count, bool with_unknot) {
  if (n < kParameterMin) throw UsageError("--n must be at least 2");
  if (count < 1) throw UsageError("--count must be at least 1");
  const FamilyReport report = exotic_family(n, count, with_unknot);
  std::cout << dsl::family_text(report, n);
  // Trivial entries (the unknot) are reported but take no side.
  std::size_t symplectic = 0, non_symplectic = 0;
  for (const auto& e : report.entries) {
    if (e.trivial) continue;
    symplectic += e.cls == SymplecticClass::symplectic;
    non_symplectic += e.cls == SymplecticClass::non_symplectic;
  }
  const auto expected = static_cast<std::size_t>(count);
  const bool partition = symplectic == expected && non_symplectic == expected;
  return report.pairwise_distinct && partition ? kPass : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geography of exotic 4-manifolds from branched covers and knot surgery"};
  app.require_subcommand(1);

  std::string script_path;
  long build_n = 0;
  auto* build = app.add_subcommand("build", "Evaluate a construction script");
  build->add_option("script", script_path, "Script file (.geo)")->required();
  auto* n_opt = build->add_option("--n", build_n, "Evaluate at this n (>= 2)");
  auto* sym_flag = build->add_flag("--symbolic", "Keep n symbolic (default)");
  n_opt->excludes(sym_flag);

  bool json = false;
  auto* verify = app.add_subcommand("verify-paper", "Check every identity and table entry");
  verify->add_flag("--json", json, "Emit a JSON array of checks");

  long n_min = 0, n_max = 0;
  std::string csv, svg;
  auto* geo = app.add_subcommand("geography", "Scan (chi_h, c1^2) over a range of n");
  geo->add_option("--n-min", n_min, "First n")->required();
  geo->add_option("--n-max", n_max, "Last n")->required();
  geo->add_option("--csv", csv, "Write the table here instead of standard output");
  geo->add_option("--svg", svg, "Write a scatter plot here");

  long ex_n = 0;
  int ex_count = 0;
  bool with_unknot = false;
  auto* exotic = app.add_subcommand("exotic", "Distinguish a family of knot surgeries");
  exotic->add_option("--n", ex_n, "Member of the construction")->required();
  exotic->add_option("--count", ex_count, "Knots of each kind")->required();
  exotic->add_flag("--include-unknot", with_unknot, "Add the unknot to the family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*build) return run_build(script_path, build_n, n_opt->count() > 0);
    if (*verify) return run_verify(json);
    if (*geo) return run_geography(n_min, n_max, csv, svg);
    return run_exotic(ex_n, ex_count, with_unknot);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
}
