#include "gorlab/quotient_ring.hpp"

#include <algorithm>

#include "gorlab/errors.hpp"

namespace gorlab {

std::shared_ptr<const QuotientRingCtx> QuotientRingCtx::create(PolyRingPtr ring,
                                                               std::vector<Polynomial> relations,
                                                               int degreeCap) {
  if (!ring) throw Error("null ring");
  for (const auto& f : relations) {
    if (f.isZero()) continue;
    if (f.leading().mono.nvars() != ring->nvars())
      throw MismatchError("relation lives in a different ring");
    if (!ring->isHomogeneous(f))
      throw InhomogeneousError("defining relation is not homogeneous: " + ring->toString(f));
  }
  std::shared_ptr<QuotientRingCtx> ctx(new QuotientRingCtx());
  ctx->ring_ = std::move(ring);
  ctx->degreeCap_ = degreeCap;
  GroebnerOptions opts;
  opts.degreeCap = degreeCap;
  ctx->gb_ = groebnerBasis(*ctx->ring_, relations, opts);
  ctx->relations_ = std::move(relations);

  std::vector<std::vector<Monomial>> lts(1);
  for (const auto& g : ctx->gb_) lts[0].push_back(g.leading().mono);
  std::vector<int> twist{0};
  ctx->hilbert_ = monomialModuleSeries(lts, twist, ctx->ring_->weights());

  int linearRelations = 0;
  for (const auto& g : ctx->gb_) linearRelations += g.degree() == 1;
  ctx->embdim_ = static_cast<int>(ctx->ring_->nvars()) - linearRelations;
  return ctx;
}

Matrix QuotientRingCtx::reduce(const Matrix& a) const {
  Matrix out(a.rowDegrees(), a.colDegrees());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    FreeVector v;
    for (const auto& e : a.column(c)) {
      Polynomial p = reduce(e.value);
      if (!p.isZero()) v.push_back(Entry{e.row, std::move(p)});
    }
    out.setColumn(c, std::move(v));
  }
  return out;
}

FreeVector QuotientRingCtx::apply(const Matrix& a, const FreeVector& v) const {
  std::vector<Polynomial> acc(a.rows());
  for (const auto& e : v) {
    if (e.row >= a.cols()) throw MismatchError("vector length exceeds matrix columns");
    for (const auto& ae : a.column(e.row))
      acc[ae.row] = ring_->add(acc[ae.row], ring_->mul(ae.value, e.value));
  }
  FreeVector out;
  for (std::size_t r = 0; r < acc.size(); ++r) {
    Polynomial p = reduce(acc[r]);
    if (!p.isZero()) out.push_back(Entry{static_cast<std::uint32_t>(r), std::move(p)});
  }
  return out;
}

Matrix QuotientRingCtx::multiply(const Matrix& a, const Matrix& b) const {
  if (a.cols() != b.rows()) throw MismatchError("matrix product: inner dimensions differ");
  Matrix out(a.rowDegrees(), b.colDegrees());
  for (std::size_t c = 0; c < b.cols(); ++c) out.setColumn(c, apply(a, b.column(c)));
  return out;
}

Matrix QuotientRingCtx::kronIdentityRight(const Matrix& a, const std::vector<int>& degrees) const {
  const std::size_t p = degrees.size();
  std::vector<int> rows, cols;
  for (int ar : a.rowDegrees())
    for (int d : degrees) rows.push_back(ar + d);
  for (int bc : a.colDegrees())
    for (int d : degrees) cols.push_back(bc + d);
  Matrix out(std::move(rows), std::move(cols));
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t s = 0; s < p; ++s) {
      FreeVector v;
      for (const auto& e : a.column(c))
        v.push_back(Entry{static_cast<std::uint32_t>(e.row * p + s), e.value});
      out.setColumn(c * p + s, std::move(v));
    }
  return out;
}

Matrix QuotientRingCtx::kronIdentityLeft(const std::vector<int>& degrees, const Matrix& a) const {
  const std::size_t m = a.rows();
  std::vector<int> rows, cols;
  for (int d : degrees)
    for (int ar : a.rowDegrees()) rows.push_back(d + ar);
  for (int d : degrees)
    for (int bc : a.colDegrees()) cols.push_back(d + bc);
  Matrix out(std::move(rows), std::move(cols));
  for (std::size_t s = 0; s < degrees.size(); ++s)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      FreeVector v;
      for (const auto& e : a.column(c))
        v.push_back(Entry{static_cast<std::uint32_t>(s * m + e.row), e.value});
      out.setColumn(s * a.cols() + c, std::move(v));
    }
  return out;
}

std::string QuotientRingCtx::toString() const {
  std::string s = "GF(" + std::to_string(ring_->field().modulus()) + ")[";
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    if (i) s += ",";
    s += ring_->variables()[i];
  }
  s += "]";
  if (!gb_.empty()) {
    s += " / (";
    for (std::size_t i = 0; i < gb_.size(); ++i) {
      if (i) s += ", ";
      s += ring_->toString(gb_[i]);
    }
    s += ")";
  }
  return s;
}

std::vector<ModVec> liftOverQuotient(const QuotientRingCtx& ctx, std::span<const ModVec> gens,
                                     std::size_t rank) {
  std::vector<ModVec> out(gens.begin(), gens.end());
  for (std::size_t j = 0; j < rank; ++j)
    for (const auto& f : ctx.idealBasis()) {
      ModVec v;
      for (const auto& t : f.terms()) v.push_back(ModTerm{t.mono, static_cast<std::uint32_t>(j), t.coef});
      out.push_back(std::move(v));
    }
  return out;
}

void requireSameContext(const QuotientRingCtx& a, const QuotientRingCtx& b) {
  if (!a.sameAs(b))
    throw MismatchError("modules live over different rings: " + a.toString() + " vs " +
                        b.toString());
}

}  // namespace gorlab
