#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gorlab/field.hpp"
#include "gorlab/monomial.hpp"

namespace gorlab {

enum class MonomialOrder { Grevlex, Lex };

struct Term {
  Monomial mono;
  Coeff coef = 0;

  bool operator==(const Term& o) const { return coef == o.coef && mono == o.mono; }
};

// Terms sorted strictly descending in the owning ring's order, no zero
// coefficients. A Polynomial does not know its ring; arithmetic goes through
// PolyRing.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Term> sortedTerms) : terms_(std::move(sortedTerms)) {}

  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term>& mutableTerms() { return terms_; }
  const Term& leading() const { return terms_.front(); }
  // Degree of the leading term; meaningful for homogeneous polynomials.
  int degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  std::vector<Term> terms_;
};

// Ambient polynomial ring F_p[x_1..x_n] with positive integer weights and a
// term order. Immutable after construction.
class PolyRing {
 public:
  PolyRing(FieldSpec field, std::vector<std::string> variables,
           MonomialOrder order = MonomialOrder::Grevlex, std::vector<int> weights = {});

  const FieldSpec& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<int>& weights() const { return weights_; }
  bool standardGrading() const { return standard_; }
  MonomialOrder order() const { return order_; }
  std::optional<std::size_t> varIndex(std::string_view name) const;

  Monomial monomial(std::span<const int> exponents) const;
  Monomial one() const { return Monomial::one(nvars()); }
  Monomial var(std::size_t i, int power = 1) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const { return a.lcm(b, weights_); }

  // -1, 0, +1. Throws MismatchError when variable counts differ.
  int compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars()) throwNvarsMismatch(a, b);
    return compareUnchecked(a, b);
  }
  int compareUnchecked(const Monomial& a, const Monomial& b) const {
    if (order_ == MonomialOrder::Grevlex) {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = nvars(); i-- > 0;) {
        int ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb) return ea < eb ? 1 : -1;
      }
      return 0;
    }
    for (std::size_t i = 0; i < nvars(); ++i) {
      int ea = a.exponent(i), eb = b.exponent(i);
      if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
  }

  Polynomial zero() const { return {}; }
  Polynomial constant(std::int64_t c) const;
  Polynomial variable(std::size_t i) const;
  Polynomial term(Coeff c, const Monomial& m) const;
  // Sorts and combines an arbitrary list of terms.
  Polynomial fromTerms(std::vector<Term> terms) const;

  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial neg(const Polynomial& f) const;
  Polynomial mul(const Polynomial& f, const Polynomial& g) const;
  Polynomial scalarMul(Coeff c, const Polynomial& f) const;
  Polynomial mulTerm(const Polynomial& f, Coeff c, const Monomial& m) const;
  // f + c*m*g in one merge.
  Polynomial addMulTerm(const Polynomial& f, Coeff c, const Monomial& m,
                        const Polynomial& g) const;
  Polynomial pow(const Polynomial& f, int e) const;
  // Divides by the leading coefficient.
  Polynomial monic(const Polynomial& f) const;

  bool isHomogeneous(const Polynomial& f) const;
  bool isConstant(const Polynomial& f) const {
    return f.isZero() || (f.size() == 1 && f.leading().mono.isOne());
  }

  // Canonical text: descending terms, explicit '*', signed coefficients.
  std::string toString(const Polynomial& f) const;
  std::string monomialString(const Monomial& m) const;
  // Grammar in docs/grammar.md. Throws ParseError (unknown variable, syntax).
  Polynomial parse(std::string_view text) const;
  // As parse, additionally throws InhomogeneousError.
  Polynomial parseHomogeneous(std::string_view text) const;

  bool operator==(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && weights_ == o.weights_ &&
           order_ == o.order_;
  }
  bool operator!=(const PolyRing& o) const { return !(*this == o); }

 private:
  [[noreturn]] static void throwNvarsMismatch(const Monomial& a, const Monomial& b);

  FieldSpec field_;
  std::vector<std::string> vars_;
  std::vector<int> weights_;
  MonomialOrder order_;
  bool standard_ = true;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

}  // namespace gorlab
