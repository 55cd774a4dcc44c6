#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fourgeo/algebra/rational.hpp"

namespace fourgeo::dsl {

/// 1-based position in the script text.
struct SourceLoc {
  int line = 1;
  int column = 1;
  std::string to_string() const {
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
  }
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Argument {
  std::string name;
  ExprPtr value;
  SourceLoc loc;
};

struct NumberLit { Integer value; };
/// The construction parameter `n`.
struct ParamRef {};
/// A let-bound name or a built-in block (T4, E2, ...).
struct NameRef { std::string name; };
/// Quoted label naming a marked surface, torus, or preset.
struct LabelLit { std::string text; };
struct CallExpr {
  std::string function;
  std::vector<Argument> args;
};
struct UnaryExpr {
  char op;
  ExprPtr operand;
};
/// op is one of + - * / ^.
struct BinaryExpr {
  char op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Expr {
  SourceLoc loc;
  std::variant<NumberLit, ParamRef, NameRef, LabelLit, CallExpr, UnaryExpr, BinaryExpr> node;
};

enum class StmtKind { let, report };

struct Statement {
  StmtKind kind = StmtKind::let;
  std::string name;  // empty for report
  ExprPtr value;
  SourceLoc loc;
};

struct Script {
  std::vector<Statement> statements;

  std::size_t binding_count() const;
  const Statement& report() const;
};

/// Structural equality, ignoring source locations.
bool equivalent(const Expr& a, const Expr& b);
bool equivalent(const Script& a, const Script& b);

/// Canonical text; parsing it yields an equivalent script.
std::string print(const Expr& e);
std::string print(const Script& s);

}  // namespace fourgeo::dsl
