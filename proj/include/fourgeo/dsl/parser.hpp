#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fourgeo/dsl/ast.hpp"

namespace fourgeo::dsl {

/// First problem found in a script, with its location.
class ParseError : public Error {
 public:
  ParseError(SourceLoc loc, const std::string& message)
      : Error(loc.to_string() + ": " + message), loc_(loc) {}
  SourceLoc loc() const { return loc_; }

 private:
  SourceLoc loc_;
};

/// Built-in names usable as expressions.
bool is_block(std::string_view name);

/// One accepted argument set of a built-in function.
struct Signature {
  std::vector<std::string> required;
  std::vector<std::string> optional;
};
/// Empty when `function` is unknown.
const std::vector<Signature>& signatures(std::string_view function);

/// Parses a construction script:
///
///   script := stmt+
///   stmt   := "let" IDENT "=" expr NEWLINE | "report" expr NEWLINE
///   expr   := term (("+" | "-") term)*
///   term   := unary (("*" | "/") unary)*
///   unary  := "-" unary | power
///   power  := primary ("^" INT)?
///   primary:= INT | "n" | IDENT | BLOCK | STRING | CALL | "(" expr ")"
///   CALL   := IDENT "(" [IDENT "=" expr ("," IDENT "=" expr)*] ")"
///
/// Newlines inside parentheses are whitespace; '#' starts a comment. Also
/// checks that names are bound before use, calls match a signature, and
/// exactly one report statement exists.
Script parse(std::string_view text);

}  // namespace fourgeo::dsl
