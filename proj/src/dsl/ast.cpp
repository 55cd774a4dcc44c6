#include "fourgeo/dsl/ast.hpp"

namespace fourgeo::dsl {

std::size_t Script::binding_count() const {
  std::size_t n = 0;
  for (const auto& s : statements)
    if (s.kind == StmtKind::let) ++n;
  return n;
}

const Statement& Script::report() const {
  for (const auto& s : statements)
    if (s.kind == StmtKind::report) return s;
  throw Error("script has no report statement");
}

namespace {

struct EquivalentVisitor {
  const Expr& other;

  bool operator()(const NumberLit& a) const {
    const auto* b = std::get_if<NumberLit>(&other.node);
    return b && a.value == b->value;
  }
  bool operator()(const ParamRef&) const { return std::holds_alternative<ParamRef>(other.node); }
  bool operator()(const NameRef& a) const {
    const auto* b = std::get_if<NameRef>(&other.node);
    return b && a.name == b->name;
  }
  bool operator()(const LabelLit& a) const {
    const auto* b = std::get_if<LabelLit>(&other.node);
    return b && a.text == b->text;
  }
  bool operator()(const CallExpr& a) const {
    const auto* b = std::get_if<CallExpr>(&other.node);
    if (!b || a.function != b->function || a.args.size() != b->args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
      if (a.args[i].name != b->args[i].name || !equivalent(*a.args[i].value, *b->args[i].value))
        return false;
    return true;
  }
  bool operator()(const UnaryExpr& a) const {
    const auto* b = std::get_if<UnaryExpr>(&other.node);
    return b && a.op == b->op && equivalent(*a.operand, *b->operand);
  }
  bool operator()(const BinaryExpr& a) const {
    const auto* b = std::get_if<BinaryExpr>(&other.node);
    return b && a.op == b->op && equivalent(*a.lhs, *b->lhs) && equivalent(*a.rhs, *b->rhs);
  }
};

int precedence(const Expr& e) {
  if (const auto* b = std::get_if<BinaryExpr>(&e.node)) {
    switch (b->op) {
      case '+':
      case '-': return 1;
      case '*':
      case '/': return 2;
      default: return 4;  // ^
    }
  }
  if (std::holds_alternative<UnaryExpr>(e.node)) return 3;
  return 5;
}

std::string wrap(const Expr& e, bool parens) { return parens ? "(" + print(e) + ")" : print(e); }

struct PrintVisitor {
  const Expr& self;

  std::string operator()(const NumberLit& a) const { return a.value.get_str(); }
  std::string operator()(const ParamRef&) const { return "n"; }
  std::string operator()(const NameRef& a) const { return a.name; }
  std::string operator()(const LabelLit& a) const { return "\"" + a.text + "\""; }
  std::string operator()(const CallExpr& a) const {
    std::string out = a.function + "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (i > 0) out += ", ";
      out += a.args[i].name + "=" + print(*a.args[i].value);
    }
    return out + ")";
  }
  std::string operator()(const UnaryExpr& a) const {
    return std::string(1, a.op) + wrap(*a.operand, precedence(*a.operand) < 3);
  }
  std::string operator()(const BinaryExpr& a) const {
    const int p = precedence(self);
    if (a.op == '^') return wrap(*a.lhs, precedence(*a.lhs) <= p) + "^" + print(*a.rhs);
    // Left-associative: the right operand needs parentheses at equal level.
    const std::string sep = p == 1 ? std::string(" ") + a.op + " " : std::string(1, a.op);
    return wrap(*a.lhs, precedence(*a.lhs) < p) + sep + wrap(*a.rhs, precedence(*a.rhs) <= p);
  }
};

}  // namespace

bool equivalent(const Expr& a, const Expr& b) { return std::visit(EquivalentVisitor{b}, a.node); }

bool equivalent(const Script& a, const Script& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (std::size_t i = 0; i < a.statements.size(); ++i) {
    const auto& x = a.statements[i];
    const auto& y = b.statements[i];
    if (x.kind != y.kind || x.name != y.name || !equivalent(*x.value, *y.value)) return false;
  }
  return true;
}

std::string print(const Expr& e) { return std::visit(PrintVisitor{e}, e.node); }

std::string print(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) {
    if (st.kind == StmtKind::let)
      out += "let " + st.name + " = " + print(*st.value) + "\n";
    else
      out += "report " + print(*st.value) + "\n";
  }
  return out;
}

}  // namespace fourgeo::dsl
