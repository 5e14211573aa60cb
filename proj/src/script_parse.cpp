#include <cctype>
#include <map>
#include <set>

#include "gorlab/errors.hpp"
#include "gorlab/script.hpp"

namespace gorlab::script {

namespace {

struct Arity {
  int min, max;
};

// Functions usable in expressions and after each command verb.
const std::map<std::string, std::map<std::string, Arity>>& signatures() {
  static const std::map<std::string, std::map<std::string, Arity>> s{
      {"",
       {{"syzygy", {2, 2}},
        {"dual", {1, 1}},
        {"hom", {2, 2}},
        {"tensor", {2, 2}},
        {"twist", {2, 2}},
        {"sum", {2, 2}},
        {"stablehom", {2, 2}},
        {"matlis", {1, 1}},
        {"socle", {1, 1}},
        {"free", {1, 8}},
        {"residue", {1, 1}},
        {"random", {2, 2}},
        {"randommcm", {2, 2}}}},
      {"scan", {{"ext", {3, 3}}, {"tor", {3, 3}}}},
      {"check",
       {{"theorem21", {2, 3}},
        {"symmetry", {2, 3}},
        {"corollary42", {2, 3}},
        {"lescot", {1, 1}},
        {"lemma36", {2, 2}},
        {"theorem59", {2, 2}},
        {"prop43", {2, 3}},
        {"changeofrings", {4, 5}},
        {"gorenstein", {1, 1}},
        {"mcm", {1, 1}},
        {"minmult", {1, 1}}}},
      {"search", {{"ab", {1, 2}}, {"lemma36", {1, 2}}}},
      {"print",
       {{"betti", {1, 2}},
        {"depth", {1, 1}},
        {"pd", {1, 2}},
        {"hilbert", {2, 2}},
        {"gaps", {2, 3}},
        {"extindex", {3, 31}},
        {"module", {1, 1}}}},
  };
  return s;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : t_(text) {}

  Script run() {
    Script s;
    skip();
    while (pos_ < t_.size()) {
      s.statements.push_back(statement());
      skip();
    }
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, Loc at) const {
    throw ParseError("line " + std::to_string(at.line) + ", column " + std::to_string(at.column) +
                         ": " + msg,
                     offsetOf(at), at.line, at.column);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, here()); }

  std::size_t offsetOf(Loc at) const {
    std::size_t line = 1, off = 0;
    while (off < t_.size() && line < at.line)
      if (t_[off++] == '\n') ++line;
    return off + at.column - 1;
  }

  Loc here() const { return Loc{line_, pos_ - lineStart_ + 1}; }

  void advance() {
    if (t_[pos_] == '\n') {
      ++line_;
      lineStart_ = pos_ + 1;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < t_.size()) {
      char c = t_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#' || (c == '/' && pos_ + 1 < t_.size() && t_[pos_ + 1] == '/')) {
        while (pos_ < t_.size() && t_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  bool peek(std::string_view s) {
    skip();
    return t_.substr(pos_, s.size()) == s;
  }

  void expect(std::string_view s) {
    if (!peek(s)) fail("expected '" + std::string(s) + "'");
    for (std::size_t i = 0; i < s.size(); ++i) advance();
  }

  bool accept(std::string_view s) {
    if (!peek(s)) return false;
    for (std::size_t i = 0; i < s.size(); ++i) advance();
    return true;
  }

  static bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool identChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string ident(const char* what = "identifier") {
    skip();
    if (pos_ >= t_.size() || !identStart(t_[pos_])) fail(std::string("expected ") + what);
    std::size_t b = pos_;
    while (pos_ < t_.size() && identChar(t_[pos_])) advance();
    return std::string(t_.substr(b, pos_ - b));
  }

  bool peekInt() {
    skip();
    std::size_t p = pos_;
    if (p < t_.size() && t_[p] == '-') ++p;
    return p < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p]));
  }

  std::int64_t integer() {
    skip();
    Loc at = here();
    std::size_t b = pos_;
    if (pos_ < t_.size() && t_[pos_] == '-') advance();
    if (pos_ >= t_.size() || !std::isdigit(static_cast<unsigned char>(t_[pos_]))) fail("expected integer");
    while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) advance();
    try {
      return std::stoll(std::string(t_.substr(b, pos_ - b)));
    } catch (const std::exception&) {
      fail("integer out of range", at);
    }
  }

  std::string stringLit() {
    skip();
    if (pos_ >= t_.size() || t_[pos_] != '"') fail("expected string");
    advance();
    std::string out;
    while (pos_ < t_.size() && t_[pos_] != '"') {
      if (t_[pos_] == '\n') fail("unterminated string");
      if (t_[pos_] == '\\' && pos_ + 1 < t_.size()) advance();
      out += t_[pos_];
      advance();
    }
    if (pos_ >= t_.size()) fail("unterminated string");
    advance();
    return out;
  }

  // Raw polynomial text up to a ',' ']' or ')' outside parentheses.
  PolyText polyText() {
    skip();
    PolyText p{{}, here()};
    int depth = 0;
    while (pos_ < t_.size()) {
      char c = t_[pos_];
      if (depth == 0 && (c == ',' || c == ']' || c == ')')) break;
      if (c == ';' || c == '[') fail("unexpected '" + std::string(1, c) + "' in polynomial");
      if (c == '(') ++depth;
      if (c == ')') --depth;
      p.text += c;
      advance();
    }
    while (!p.text.empty() && std::isspace(static_cast<unsigned char>(p.text.back()))) p.text.pop_back();
    if (p.text.empty()) fail("expected polynomial", p.loc);
    return p;
  }

  void requireDefined(const std::string& name, Loc at) {
    if (name == "k" || name == "R") {
      if (!anyRing_) fail("'" + name + "' used before any ring is declared", at);
      return;
    }
    if (!defined_.count(name)) fail("undefined identifier '" + name + "'", at);
  }

  void define(const std::string& name, Loc at) {
    if (name == "k" || name == "R") {
      // A ring may be called R; k stays reserved.
      if (name == "k") fail("'k' is a built-in name", at);
    }
    defined_.insert(name);
  }

  Expr expr() {
    skip();
    Expr e;
    e.loc = here();
    if (peekInt()) {
      e.kind = Expr::Kind::Int;
      e.lo = integer();
      if (accept("..")) {
        e.kind = Expr::Kind::Range;
        e.hi = integer();
        if (e.hi < e.lo) fail("empty range", e.loc);
      }
      return e;
    }
    if (peek("\"")) {
      e.kind = Expr::Kind::String;
      e.text = stringLit();
      return e;
    }
    e.text = ident("expression");
    if (!peek("(")) {
      e.kind = Expr::Kind::Name;
      requireDefined(e.text, e.loc);
      return e;
    }
    e.kind = Expr::Kind::Call;
    const auto& fns = signatures().at("");
    auto it = fns.find(e.text);
    if (it == fns.end()) fail("unknown function '" + e.text + "'", e.loc);
    callArgs(e, it->second);
    return e;
  }

  void callArgs(Expr& e, Arity a) {
    expect("(");
    if (!peek(")")) {
      e.args.push_back(expr());
      while (accept(",")) e.args.push_back(expr());
    }
    expect(")");
    const int n = static_cast<int>(e.args.size());
    if (n < a.min || n > a.max)
      fail("'" + e.text + "' takes " + std::to_string(a.min) +
               (a.max != a.min ? " to " + std::to_string(a.max) : std::string()) + " arguments, got " +
               std::to_string(n),
           e.loc);
  }

  Statement statement() {
    skip();
    Statement s;
    s.loc = here();
    const std::size_t begin = pos_;
    const std::string kw = ident("statement");
    if (kw == "ring") {
      s.kind = Statement::Kind::Ring;
      Loc at = here();
      s.name = ident("ring name");
      expect("=");
      if (ident("field") != "GF") fail("expected GF(p)");
      expect("(");
      std::int64_t p = integer();
      if (p < 2) fail("field characteristic must be a prime", at);
      s.prime = static_cast<std::uint64_t>(p);
      expect(")");
      expect("[");
      s.variables.push_back(ident("variable"));
      while (accept(",")) s.variables.push_back(ident("variable"));
      expect("]");
      if (accept("/")) {
        expect("(");
        s.relations.push_back(polyText());
        while (accept(",")) s.relations.push_back(polyText());
        expect(")");
      }
      define(s.name, at);
      anyRing_ = true;
    } else if (kw == "module" || kw == "let") {
      s.kind = Statement::Kind::Let;
      Loc at = here();
      s.name = ident("name");
      expect("=");
      skip();
      if (kw == "module" && peek("coker") &&
          !(pos_ + 5 < t_.size() && identChar(t_[pos_ + 5]))) {
        s.kind = Statement::Kind::Module;
        expect("coker");
        Loc rl = here();
        s.ringName = ident("ring name");
        if (s.ringName != "R" || defined_.count("R")) requireDefined(s.ringName, rl);
        else if (!anyRing_) fail("'R' used before any ring is declared", rl);
        if (accept("gens")) {
          expect("{");
          s.rowDegrees.push_back(static_cast<int>(integer()));
          while (accept(",")) s.rowDegrees.push_back(static_cast<int>(integer()));
          expect("}");
        }
        expect("[");
        do {
          expect("[");
          std::vector<PolyText> row{polyText()};
          while (accept(",")) row.push_back(polyText());
          expect("]");
          if (!s.rows.empty() && row.size() != s.rows.front().size())
            fail("matrix rows have different lengths");
          s.rows.push_back(std::move(row));
        } while (accept(","));
        expect("]");
        if (!s.rowDegrees.empty() && s.rowDegrees.size() != s.rows.size())
          fail("gens lists " + std::to_string(s.rowDegrees.size()) + " degrees for " +
               std::to_string(s.rows.size()) + " rows");
      } else {
        s.expr = expr();
      }
      define(s.name, at);
    } else if (kw == "emit") {
      s.kind = Statement::Kind::Emit;
      s.format = ident("format");
      if (s.format != "json" && s.format != "table") fail("emit format must be json or table");
      s.path = stringLit();
    } else if (signatures().count(kw) && !kw.empty()) {
      s.kind = Statement::Kind::Command;
      s.verb = kw;
      skip();
      s.expr.loc = here();
      s.expr.kind = Expr::Kind::Call;
      s.expr.text = ident("command");
      const auto& fns = signatures().at(kw);
      auto it = fns.find(s.expr.text);
      if (it == fns.end()) fail("unknown " + kw + " command '" + s.expr.text + "'", s.expr.loc);
      callArgs(s.expr, it->second);
    } else {
      fail("unknown statement '" + kw + "'", s.loc);
    }
    expect(";");
    s.source = std::string(t_.substr(begin, pos_ - begin));
    return s;
  }

  std::string_view t_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t lineStart_ = 0;
  std::set<std::string> defined_;
  bool anyRing_ = false;
};

}  // namespace

Script parseScript(std::string_view text) { return Parser(text).run(); }

}  // namespace gorlab::script
