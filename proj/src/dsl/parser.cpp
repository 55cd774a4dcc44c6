#include "fourgeo/dsl/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>

namespace fourgeo::dsl {

namespace {

constexpr std::array<std::string_view, 5> kBlocks = {"T4", "E2", "CP2", "CP2BAR", "UNKNOT"};

const std::map<std::string, std::vector<Signature>, std::less<>>& signature_table() {
  static const std::map<std::string, std::vector<Signature>, std::less<>> table = {
      {"manifold", {{{"e", "sigma"}, {}}}},
      {"blowup", {{{"m", "k"}, {"surface"}}}},
      {"surface_blowup", {{{"s", "points"}, {}}}},
      {"branched_cover",
       {{{"m", "degree", "index", "e_branch", "d_sq", "k_dot_d"}, {}}, {{"m", "preset"}, {}}}},
      {"riemann_hurwitz", {{{"e_base", "branch_points", "degree", "index"}, {}}}},
      {"surface", {{{"genus", "self_int"}, {}}, {{"euler", "self_int"}, {}}}},
      {"resolve", {{{"a", "b", "k"}, {}}}},
      {"fiber_sum", {{{"x", "fx", "y", "fy"}, {"onto", "complement"}}}},
      {"knot_surgery", {{{"m", "knot"}, {"torus", "graft"}}}},
      {"torus_knot", {{{"p", "q"}, {}}}},
      {"twist_knot", {{{"m"}, {}}}},
      {"fibered_knot", {{{"genus"}, {}}}},
      {"genus", {{{"s"}, {}}}},
      {"self_int", {{{"s"}, {}}}},
      {"e", {{{"m"}, {}}}},
      {"sigma", {{{"m"}, {}}}},
      {"c1sq", {{{"m"}, {}}}},
      {"chi_h", {{{"m"}, {}}}},
  };
  return table;
}

enum class Tok { ident, integer, string, lparen, rparen, comma, equals, plus, minus, star, slash,
                 caret, newline, end };

struct Token {
  Tok kind;
  std::string text;
  SourceLoc loc;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::vector<SourceLoc> open;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      const SourceLoc here = loc_;
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == '\n') {
        if (open.empty()) out.push_back({Tok::newline, "\n", here});
        advance();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          digits += advance();
        out.push_back({Tok::integer, digits, here});
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          word += advance();
        out.push_back({Tok::ident, word, here});
      } else if (c == '"') {
        advance();
        std::string body;
        while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') body += advance();
        if (pos_ >= text_.size() || text_[pos_] != '"') throw ParseError(here, "unterminated label");
        advance();
        out.push_back({Tok::string, body, here});
      } else {
        out.push_back({punct(c, here), std::string(1, c), here});
        if (c == '(') open.push_back(here);
        if (c == ')') {
          if (open.empty()) throw ParseError(here, "unbalanced ')'");
          open.pop_back();
        }
        advance();
      }
    }
    if (!open.empty()) throw ParseError(open.back(), "unbalanced '(': missing ')'");
    out.push_back({Tok::newline, "\n", loc_});
    out.push_back({Tok::end, "", loc_});
    return out;
  }

 private:
  static Tok punct(char c, SourceLoc where) {
    switch (c) {
      case '(': return Tok::lparen;
      case ')': return Tok::rparen;
      case ',': return Tok::comma;
      case '=': return Tok::equals;
      case '+': return Tok::plus;
      case '-': return Tok::minus;
      case '*': return Tok::star;
      case '/': return Tok::slash;
      case '^': return Tok::caret;
      default: break;
    }
    throw ParseError(where, "unexpected character '" + std::string(1, c) + "'");
  }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++loc_.line;
      loc_.column = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0U) != 0x80U) {
      ++loc_.column;  // count code points, not UTF-8 continuation bytes
    }
    return c;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  SourceLoc loc_;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Script script() {
    Script s;
    for (;;) {
      while (peek().kind == Tok::newline) ++pos_;
      if (peek().kind == Tok::end) break;
      s.statements.push_back(statement());
    }
    return s;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) throw ParseError(peek().loc, "expected " + what + ", found " + describe(peek()));
    return next();
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::newline: return "end of line";
      case Tok::end: return "end of input";
      case Tok::string: return "label \"" + t.text + "\"";
      default: return "'" + t.text + "'";
    }
  }

  Statement statement() {
    const Token& head = expect(Tok::ident, "'let' or 'report'");
    Statement st;
    st.loc = head.loc;
    if (head.text == "let") {
      const Token& name = expect(Tok::ident, "a name after 'let'");
      if (name.text == "let" || name.text == "report" || name.text == "n" || is_block(name.text))
        throw ParseError(name.loc, "'" + name.text + "' is reserved and cannot be bound");
      st.name = name.text;
      expect(Tok::equals, "'='");
    } else if (head.text == "report") {
      st.kind = StmtKind::report;
    } else {
      throw ParseError(head.loc, "expected 'let' or 'report', found '" + head.text + "'");
    }
    st.value = expr();
    if (peek().kind != Tok::newline)
      throw ParseError(peek().loc, "expected end of line, found " + describe(peek()));
    next();
    return st;
  }

  static ExprPtr make(SourceLoc loc, auto node) {
    return std::make_shared<const Expr>(Expr{loc, std::move(node)});
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token& op = next();
      lhs = make(op.loc, BinaryExpr{op.text[0], lhs, term()});
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const Token& op = next();
      lhs = make(op.loc, BinaryExpr{op.text[0], lhs, unary()});
    }
    return lhs;
  }

  ExprPtr unary() {
    if (peek().kind == Tok::minus) {
      const Token& op = next();
      return make(op.loc, UnaryExpr{'-', unary()});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (peek().kind == Tok::caret) {
      const Token& op = next();
      const Token& exp = expect(Tok::integer, "an integer exponent after '^'");
      base = make(op.loc, BinaryExpr{'^', base, make(exp.loc, NumberLit{Integer(exp.text)})});
    }
    return base;
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::integer:
        next();
        return make(t.loc, NumberLit{Integer(t.text)});
      case Tok::string:
        next();
        return make(t.loc, LabelLit{t.text});
      case Tok::lparen: {
        next();
        ExprPtr inner = expr();
        expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::ident: {
        next();
        if (peek().kind == Tok::lparen) {
          if (t.text == "n") throw ParseError(t.loc, "'n' is the parameter, not a function");
          return call(t);
        }
        if (t.text == "n") return make(t.loc, ParamRef{});
        return make(t.loc, NameRef{t.text});
      }
      default:
        throw ParseError(t.loc, "expected an expression, found " + describe(t));
    }
  }

  ExprPtr call(const Token& fn) {
    expect(Tok::lparen, "'('");
    CallExpr c{fn.text, {}};
    if (peek().kind != Tok::rparen) {
      bool named_seen = false;
      for (;;) {
        if (peek().kind == Tok::ident && peek(1).kind == Tok::equals) {
          const Token& name = next();
          next();
          named_seen = true;
          c.args.push_back({name.text, expr(), name.loc});
        } else {
          // A leading positional argument takes the name of the matching
          // required parameter of the first signature.
          const SourceLoc loc = peek().loc;
          if (named_seen) throw ParseError(loc, "positional argument after a named one");
          const auto& sigs = signatures(fn.text);
          const std::size_t index = c.args.size();
          if (sigs.empty()) throw ParseError(fn.loc, "unknown function '" + fn.text + "'");
          if (index >= sigs.front().required.size())
            throw ParseError(loc, "too many positional arguments for '" + fn.text + "'");
          c.args.push_back({sigs.front().required[index], expr(), loc});
        }
        if (peek().kind != Tok::comma) break;
        next();
      }
    }
    expect(Tok::rparen, "')'");
    return make(fn.loc, std::move(c));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string format_signature(const std::string& fn, const Signature& sig) {
  std::string out = fn + "(";
  bool first = true;
  for (const auto& a : sig.required) {
    out += (first ? "" : ", ") + a;
    first = false;
  }
  for (const auto& a : sig.optional) {
    out += (first ? "[" : "[, ") + a + "]";
    first = false;
  }
  return out + ")";
}

class Checker {
 public:
  explicit Checker(const Script& s) : script_(s) {
    for (std::size_t i = 0; i < s.statements.size(); ++i)
      if (s.statements[i].kind == StmtKind::let) later_.emplace(s.statements[i].name, i);
  }

  void run() {
    const Statement* report = nullptr;
    for (const auto& st : script_.statements) {
      current_ = &st;
      check(*st.value);
      if (st.kind == StmtKind::report) {
        if (report) throw ParseError(st.loc, "only one report statement is allowed (first at " +
                                                 report->loc.to_string() + ")");
        report = &st;
        continue;
      }
      if (auto it = bound_.find(st.name); it != bound_.end())
        throw ParseError(st.loc, "'" + st.name + "' is already bound at " + it->second.to_string());
      bound_.emplace(st.name, st.loc);
    }
    if (!report) {
      SourceLoc end = script_.statements.empty() ? SourceLoc{} : script_.statements.back().loc;
      throw ParseError(end, "script has no report statement");
    }
  }

 private:
  void check(const Expr& e) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, NameRef>) {
            name(node.name, e.loc);
          } else if constexpr (std::is_same_v<T, CallExpr>) {
            call(node, e.loc);
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            check(*node.operand);
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            check(*node.lhs);
            check(*node.rhs);
          }
        },
        e.node);
  }

  void name(const std::string& id, SourceLoc loc) {
    if (is_block(id) || bound_.contains(id)) return;
    if (current_->kind == StmtKind::let && current_->name == id)
      throw ParseError(loc, "cycle: '" + id + "' refers to itself");
    if (later_.contains(id))
      throw ParseError(loc, "'" + id + "' is used before it is bound (forward reference or cycle)");
    throw ParseError(loc, "unknown identifier '" + id + "'");
  }

  void call(const CallExpr& c, SourceLoc loc) {
    const auto& sigs = signatures(c.function);
    if (sigs.empty()) throw ParseError(loc, "unknown function '" + c.function + "'");
    std::set<std::string> given;
    for (const auto& a : c.args) {
      if (!given.insert(a.name).second)
        throw ParseError(a.loc, "argument '" + a.name + "' given twice");
      check(*a.value);
    }
    for (const auto& sig : sigs) {
      const bool has_required = std::all_of(sig.required.begin(), sig.required.end(),
                                            [&](const auto& r) { return given.contains(r); });
      const bool all_known = std::all_of(given.begin(), given.end(), [&](const auto& g) {
        return std::find(sig.required.begin(), sig.required.end(), g) != sig.required.end() ||
               std::find(sig.optional.begin(), sig.optional.end(), g) != sig.optional.end();
      });
      if (has_required && all_known) return;
    }
    std::string expected;
    for (const auto& sig : sigs)
      expected += (expected.empty() ? "" : " or ") + format_signature(c.function, sig);
    throw ParseError(loc, "arguments do not match " + expected);
  }

  const Script& script_;
  const Statement* current_ = nullptr;
  std::map<std::string, SourceLoc> bound_;
  std::map<std::string, std::size_t> later_;
};

}  // namespace

bool is_block(std::string_view name) {
  return std::find(kBlocks.begin(), kBlocks.end(), name) != kBlocks.end();
}

const std::vector<Signature>& signatures(std::string_view function) {
  static const std::vector<Signature> none;
  const auto& table = signature_table();
  auto it = table.find(function);
  return it == table.end() ? none : it->second;
}

Script parse(std::string_view text) {
  Script s = Parser(Lexer(text).run()).script();
  Checker(s).run();
  return s;
}

}  // namespace fourgeo::dsl
