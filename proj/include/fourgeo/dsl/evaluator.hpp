#pragma once

#include <map>
#include <string>
#include <variant>

#include "fourgeo/calculus/manifold.hpp"
#include "fourgeo/dsl/ast.hpp"
#include "fourgeo/knots/knot.hpp"
#include "fourgeo/pipeline/pipeline.hpp"

namespace fourgeo::dsl {

struct Label {
  std::string text;
};

using Value = std::variant<Scalar, MarkedSurface, ManifoldRecord, Knot, Label>;

/// Operation failure, located at the statement that triggered it.
class EvalError : public Error {
 public:
  EvalError(SourceLoc loc, const std::string& message)
      : Error(loc.to_string() + ": " + message), loc_(loc) {}
  SourceLoc loc() const { return loc_; }

 private:
  SourceLoc loc_;
};

struct ScriptResult {
  std::string reported;  // text of the reported expression
  Value value;
  std::map<std::string, Value> bindings;
};

/// Runs a parsed script. In numeric mode every occurrence of n is replaced
/// by its value before any operation runs.
ScriptResult evaluate(const Script& script, const Mode& mode);

std::string type_name(const Value& v);

}  // namespace fourgeo::dsl
