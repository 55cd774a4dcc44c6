#include "fourgeo/dsl/evaluator.hpp"

#include <functional>

#include "fourgeo/calculus/blocks.hpp"
#include "fourgeo/calculus/surgery.hpp"

namespace fourgeo::dsl {

std::string type_name(const Value& v) {
  struct Namer {
    std::string operator()(const Scalar&) const { return "scalar"; }
    std::string operator()(const MarkedSurface&) const { return "surface"; }
    std::string operator()(const ManifoldRecord&) const { return "manifold"; }
    std::string operator()(const Knot&) const { return "knot"; }
    std::string operator()(const Label&) const { return "label"; }
  };
  return std::visit(Namer{}, v);
}

namespace {

template <class T>
constexpr const char* kTypeName = "";
template <> constexpr const char* kTypeName<Scalar> = "scalar";
template <> constexpr const char* kTypeName<MarkedSurface> = "surface";
template <> constexpr const char* kTypeName<ManifoldRecord> = "manifold";
template <> constexpr const char* kTypeName<Knot> = "knot";
template <> constexpr const char* kTypeName<Label> = "label";

class Evaluator;

/// Evaluated arguments of one call.
class Args {
 public:
  Args(std::string function, std::map<std::string, Value> values)
      : function_(std::move(function)), values_(std::move(values)) {}

  bool has(const std::string& name) const { return values_.contains(name); }

  const Value& raw(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) throw Error("missing argument '" + name + "'");
    return it->second;
  }

  template <class T>
  const T& get(const std::string& name) const {
    const Value& v = raw(name);
    if (const T* p = std::get_if<T>(&v)) return *p;
    throw Error("argument '" + name + "' must be a " + kTypeName<T> + ", got a " + type_name(v));
  }

  long integer(const std::string& name) const {
    const Scalar& s = get<Scalar>(name);
    if (s.is_symbolic() || !s.number().is_integer() || !s.number().numerator().fits_slong_p())
      throw Error("argument '" + name + "' must be an integer constant, got " + s.to_string());
    return s.number().numerator().get_si();
  }

  std::string label(const std::string& name) const { return has(name) ? get<Label>(name).text : ""; }

  /// A surface given directly, or a label naming a marked surface of `owner`.
  MarkedSurface surface_on(const std::string& name, const ManifoldRecord& owner) const {
    const Value& v = raw(name);
    if (const auto* l = std::get_if<Label>(&v)) return owner.surface(l->text);
    return get<MarkedSurface>(name);
  }

 private:
  std::string function_;
  std::map<std::string, Value> values_;
};

using Builtin = std::function<Value(const Args&, const Mode&)>;

const std::map<std::string, Builtin>& builtins() {
  static const std::map<std::string, Builtin> table = {
      {"manifold",
       [](const Args& a, const Mode&) -> Value {
         return mk_manifold(a.get<Scalar>("e"), a.get<Scalar>("sigma"));
       }},
      {"blowup",
       [](const Args& a, const Mode&) -> Value {
         const auto& m = a.get<ManifoldRecord>("m");
         if (a.has("surface")) return blow_up_on_surface(m, a.get<Scalar>("k"), a.label("surface"));
         return blow_up(m, a.get<Scalar>("k"));
       }},
      {"surface_blowup",
       [](const Args& a, const Mode&) -> Value {
         return surface_blowup(a.get<MarkedSurface>("s"), a.get<Scalar>("points"));
       }},
      {"branched_cover",
       [](const Args& a, const Mode& mode) -> Value {
         const auto& m = a.get<ManifoldRecord>("m");
         if (a.has("preset")) {
           if (a.label("preset") != "hirzebruch")
             throw Error("unknown branch preset \"" + a.label("preset") + "\"");
           return branched_cover(m, hirzebruch_preset(mode.parameter()));
         }
         return branched_cover(m, {a.get<Scalar>("e_branch"), a.get<Scalar>("d_sq"),
                                   a.get<Scalar>("k_dot_d"), a.get<Scalar>("degree"),
                                   a.get<Scalar>("index")});
       }},
      {"riemann_hurwitz",
       [](const Args& a, const Mode&) -> Value {
         return riemann_hurwitz(a.get<Scalar>("e_base"), a.get<Scalar>("branch_points"),
                                a.get<Scalar>("degree"), a.get<Scalar>("index"));
       }},
      {"surface",
       [](const Args& a, const Mode&) -> Value {
         const Scalar genus =
             a.has("genus") ? a.get<Scalar>("genus") : genus_from_euler(a.get<Scalar>("euler"));
         if (!genus.is_integer_valued() || !certify_nonnegative(genus))
           throw Error("genus must be a nonnegative integer, got " + genus.to_string());
         return MarkedSurface{"", genus, a.get<Scalar>("self_int")};
       }},
      {"resolve",
       [](const Args& a, const Mode&) -> Value {
         return resolve_surfaces(a.get<MarkedSurface>("a"), a.get<MarkedSurface>("b"),
                                 a.get<Scalar>("k"));
       }},
      {"fiber_sum",
       [](const Args& a, const Mode&) -> Value {
         const auto& x = a.get<ManifoldRecord>("x");
         const auto& y = a.get<ManifoldRecord>("y");
         return fiber_sum(x, a.surface_on("fx", x), y, a.surface_on("fy", y),
                          {a.label("onto"), a.label("complement")});
       }},
      {"knot_surgery",
       [](const Args& a, const Mode&) -> Value {
         return knot_surgery(a.get<ManifoldRecord>("m"), a.get<Knot>("knot"),
                             {a.label("torus"), a.label("graft")});
       }},
      {"torus_knot",
       [](const Args& a, const Mode&) -> Value { return torus_knot(a.integer("p"), a.integer("q")); }},
      {"twist_knot", [](const Args& a, const Mode&) -> Value { return twist_knot(a.integer("m")); }},
      {"fibered_knot",
       [](const Args& a, const Mode&) -> Value {
         return find_fibered_knot_of_genus(a.get<Scalar>("genus"));
       }},
      {"genus", [](const Args& a, const Mode&) -> Value { return a.get<MarkedSurface>("s").genus; }},
      {"self_int",
       [](const Args& a, const Mode&) -> Value { return a.get<MarkedSurface>("s").self_int; }},
      {"e", [](const Args& a, const Mode&) -> Value { return a.get<ManifoldRecord>("m").e; }},
      {"sigma", [](const Args& a, const Mode&) -> Value { return a.get<ManifoldRecord>("m").sigma; }},
      {"c1sq", [](const Args& a, const Mode&) -> Value { return a.get<ManifoldRecord>("m").c1sq(); }},
      {"chi_h", [](const Args& a, const Mode&) -> Value { return a.get<ManifoldRecord>("m").chi_h(); }},
  };
  return table;
}

Value block(const std::string& name) {
  if (name == "T4") return blocks::t4();
  if (name == "E2") return blocks::e2();
  if (name == "CP2") return blocks::cp2();
  if (name == "CP2BAR") return blocks::cp2bar();
  if (name == "UNKNOT") return unknot();
  throw Error("unknown block '" + name + "'");
}

class Evaluator {
 public:
  explicit Evaluator(const Mode& mode) : mode_(mode) {}

  std::map<std::string, Value> env;

  Value eval(const Expr& e) {
    return std::visit([&](const auto& node) { return eval_node(node, e); }, e.node);
  }

 private:
  Scalar scalar(const Expr& e) {
    Value v = eval(e);
    if (auto* s = std::get_if<Scalar>(&v)) return std::move(*s);
    throw Error("arithmetic on a " + type_name(v) + " (" + print(e) + ")");
  }

  Value eval_node(const NumberLit& n, const Expr&) { return Scalar(Rational(n.value)); }
  Value eval_node(const ParamRef&, const Expr&) { return mode_.parameter(); }
  Value eval_node(const LabelLit& l, const Expr&) { return Label{l.text}; }
  Value eval_node(const NameRef& r, const Expr&) {
    if (auto it = env.find(r.name); it != env.end()) return it->second;
    return block(r.name);
  }
  Value eval_node(const UnaryExpr& u, const Expr&) { return -scalar(*u.operand); }
  Value eval_node(const BinaryExpr& b, const Expr&) {
    const Scalar lhs = scalar(*b.lhs);
    const Scalar rhs = scalar(*b.rhs);
    switch (b.op) {
      case '+': return lhs + rhs;
      case '-': return lhs - rhs;
      case '*': return lhs * rhs;
      case '/': return lhs / rhs;
      default: break;
    }
    if (rhs.is_symbolic() || !rhs.number().is_integer() || !rhs.number().numerator().fits_uint_p())
      throw Error("exponent must be a nonnegative integer");
    return pow(lhs, static_cast<unsigned>(rhs.number().numerator().get_ui()));
  }
  Value eval_node(const CallExpr& c, const Expr&) {
    std::map<std::string, Value> values;
    for (const auto& a : c.args) values.emplace(a.name, eval(*a.value));
    const auto& table = builtins();
    auto it = table.find(c.function);
    if (it == table.end()) throw Error("unknown function '" + c.function + "'");
    try {
      return it->second(Args(c.function, std::move(values)), mode_);
    } catch (const EvalError&) {
      throw;
    } catch (const Error& err) {
      throw Error(c.function + ": " + err.what());
    }
  }

  const Mode& mode_;
};

}  // namespace

ScriptResult evaluate(const Script& script, const Mode& mode) {
  Evaluator ev(mode);
  ScriptResult result;
  bool reported = false;
  for (const auto& st : script.statements) {
    Value v;
    try {
      v = ev.eval(*st.value);
    } catch (const EvalError&) {
      throw;
    } catch (const Error& err) {
      throw EvalError(st.loc, err.what());
    }
    if (st.kind == StmtKind::report) {
      result.reported = print(*st.value);
      result.value = std::move(v);
      reported = true;
      continue;
    }
    if (auto* m = std::get_if<ManifoldRecord>(&v)) m->name = st.name;
    if (auto* s = std::get_if<MarkedSurface>(&v)) s->name = st.name;
    ev.env.insert_or_assign(st.name, std::move(v));
  }
  if (!reported) throw Error("script has no report statement");
  result.bindings = std::move(ev.env);
  return result;
}

}  // namespace fourgeo::dsl
