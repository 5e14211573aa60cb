#include "gorlab/poly_ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "gorlab/errors.hpp"

namespace gorlab {

PolyRing::PolyRing(FieldSpec field, std::vector<std::string> variables,
                   MonomialOrder order, std::vector<int> weights)
    : field_(field), vars_(std::move(variables)), weights_(std::move(weights)), order_(order) {
  if (vars_.size() > Monomial::kMaxVars)
    throw Error("at most " + std::to_string(Monomial::kMaxVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw Error("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error("duplicate variable name '" + v + "'");
  }
  if (weights_.empty()) weights_.assign(vars_.size(), 1);
  if (weights_.size() != vars_.size()) throw MismatchError("weight count differs from variable count");
  for (int w : weights_) {
    if (w <= 0) throw Error("variable weights must be positive");
    if (w != 1) standard_ = false;
  }
}

std::optional<std::size_t> PolyRing::varIndex(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

Monomial PolyRing::monomial(std::span<const int> exponents) const {
  if (exponents.size() != nvars()) throw MismatchError("exponent vector length differs from variable count");
  return Monomial(exponents, weights_);
}

Monomial PolyRing::var(std::size_t i, int power) const {
  std::vector<int> e(nvars(), 0);
  e.at(i) = power;
  return Monomial(e, weights_);
}

void PolyRing::throwNvarsMismatch(const Monomial& a, const Monomial& b) {
  throw MismatchError("monomials over " + std::to_string(a.nvars()) + " and " +
                      std::to_string(b.nvars()) + " variables");
}

Polynomial PolyRing::constant(std::int64_t c) const {
  Coeff v = field_.fromInt(c);
  if (v == 0) return {};
  return Polynomial({Term{one(), v}});
}

Polynomial PolyRing::variable(std::size_t i) const { return Polynomial({Term{var(i), 1}}); }

Polynomial PolyRing::term(Coeff c, const Monomial& m) const {
  if (c % field_.modulus() == 0) return {};
  return Polynomial({Term{m, c % field_.modulus()}});
}

Polynomial PolyRing::fromTerms(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(), [this](const Term& a, const Term& b) {
    return compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = field_.add(out.back().coef, t.coef);
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return Polynomial(std::move(out));
}

Polynomial PolyRing::addMulTerm(const Polynomial& f, Coeff c, const Monomial& m,
                                const Polynomial& g) const {
  if (c == 0 || g.isZero()) return f;
  const auto& a = f.terms();
  const auto& b = g.terms();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Monomial bm = b[j].mono * m;
    int cmp = compare(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{bm, field_.mul(c, b[j++].coef)});
    } else {
      Coeff s = field_.add(a[i].coef, field_.mul(c, b[j].coef));
      if (s != 0) out.push_back(Term{a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(Term{b[j].mono * m, field_.mul(c, b[j].coef)});
  return Polynomial(std::move(out));
}

Polynomial PolyRing::add(const Polynomial& f, const Polynomial& g) const {
  return addMulTerm(f, 1, one(), g);
}

Polynomial PolyRing::sub(const Polynomial& f, const Polynomial& g) const {
  return addMulTerm(f, field_.neg(1), one(), g);
}

Polynomial PolyRing::neg(const Polynomial& f) const { return scalarMul(field_.neg(1), f); }

Polynomial PolyRing::scalarMul(Coeff c, const Polynomial& f) const {
  c %= field_.modulus();
  if (c == 0) return {};
  std::vector<Term> out = f.terms();
  for (auto& t : out) t.coef = field_.mul(t.coef, c);
  return Polynomial(std::move(out));
}

Polynomial PolyRing::mulTerm(const Polynomial& f, Coeff c, const Monomial& m) const {
  c %= field_.modulus();
  if (c == 0) return {};
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back(Term{t.mono * m, field_.mul(t.coef, c)});
  return Polynomial(std::move(out));
}

Polynomial PolyRing::mul(const Polynomial& f, const Polynomial& g) const {
  if (f.isZero() || g.isZero()) return {};
  if (f.size() < g.size()) return mul(g, f);
  std::vector<Term> all;
  all.reserve(f.size() * g.size());
  for (const auto& t : g.terms())
    for (const auto& s : f.terms()) all.push_back(Term{s.mono * t.mono, field_.mul(s.coef, t.coef)});
  return fromTerms(std::move(all));
}

Polynomial PolyRing::pow(const Polynomial& f, int e) const {
  if (e < 0) throw Error("negative exponent");
  Polynomial result = constant(1);
  Polynomial base = f;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Polynomial PolyRing::monic(const Polynomial& f) const {
  if (f.isZero() || f.leading().coef == 1) return f;
  return scalarMul(field_.inv(f.leading().coef), f);
}

bool PolyRing::isHomogeneous(const Polynomial& f) const {
  for (const auto& t : f.terms())
    if (t.mono.degree() != f.leading().mono.degree()) return false;
  return true;
}

std::string PolyRing::monomialString(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < nvars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += vars_[i];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string PolyRing::toString(const Polynomial& f) const {
  if (f.isZero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::int64_t c = field_.toSigned(t.coef);
    bool negative = c < 0;
    std::int64_t mag = negative ? -c : c;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.isOne()) {
      s += std::to_string(mag);
    } else if (mag == 1) {
      s += monomialString(t.mono);
    } else {
      s += std::to_string(mag) + "*" + monomialString(t.mono);
    }
  }
  return s;
}

namespace {

// Recursive-descent evaluator over the grammar
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := factor { '*' factor }
//   factor := atom [ '^' integer ]
//   atom   := integer | identifier | '(' expr ')' | '-' factor
class PolyParser {
 public:
  PolyParser(const PolyRing& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parseAll() {
    skipSpace();
    if (pos_ >= text_.size()) fail("empty polynomial expression");
    Polynomial p = expr();
    skipSpace();
    if (pos_ < text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_), pos_);
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial t = term();
    acc = negate ? ring_.neg(t) : t;
    while (true) {
      if (accept('+')) acc = ring_.add(acc, term());
      else if (accept('-')) acc = ring_.sub(acc, term());
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = ring_.mul(acc, factor());
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      skipSpace();
      std::size_t start = pos_;
      long long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + (text_[pos_] - '0');
        if (e > Monomial::kMaxExponent) fail("exponent too large");
        ++pos_;
      }
      if (pos_ == start) fail("expected non-negative integer exponent");
      base = ring_.pow(base, static_cast<int>(e));
    }
    return base;
  }

  Polynomial atom() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return ring_.neg(factor());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto& field = ring_.field();
      Coeff v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = field.add(field.mul(v, 10 % field.modulus()),
                      static_cast<Coeff>(text_[pos_] - '0') % field.modulus());
        ++pos_;
      }
      return ring_.term(v, ring_.one());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_.varIndex(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return ring_.variable(*idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const PolyRing& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial PolyRing::parse(std::string_view text) const { return PolyParser(*this, text).parseAll(); }

Polynomial PolyRing::parseHomogeneous(std::string_view text) const {
  Polynomial p = parse(text);
  if (!isHomogeneous(p))
    throw InhomogeneousError("polynomial is not homogeneous: " + toString(p));
  return p;
}

}  // namespace gorlab
