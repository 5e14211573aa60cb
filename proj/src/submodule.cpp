#include "gorlab/submodule.hpp"

#include <algorithm>

#include "gorlab/errors.hpp"

namespace gorlab {

ModVec toModVec(const FreeVector& v, std::uint32_t offset) {
  ModVec out;
  for (const auto& e : v)
    for (const auto& t : e.value.terms()) out.push_back(ModTerm{t.mono, e.row + offset, t.coef});
  return out;
}

FreeVector toFreeVector(const PolyRing& ring, const ModVec& v, std::uint32_t offset,
                        std::size_t rank) {
  std::vector<std::vector<Term>> rows(rank);
  for (const auto& t : v)
    if (t.comp >= offset && t.comp < offset + rank) rows[t.comp - offset].push_back(Term{t.mono, t.coef});
  FreeVector out;
  for (std::size_t r = 0; r < rank; ++r) {
    if (rows[r].empty()) continue;
    Polynomial p = ring.fromTerms(std::move(rows[r]));
    if (!p.isZero()) out.push_back(Entry{static_cast<std::uint32_t>(r), std::move(p)});
  }
  return out;
}

namespace {

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

SubmoduleGB::SubmoduleGB(const QuotientRingCtx& ctx, std::vector<int> degrees,
                         const std::vector<FreeVector>& gens)
    : ctx_(&ctx),
      degrees_(std::move(degrees)),
      gb_(ModuleOrder(ctx.ring(), degrees_), ctx.idealBasis(), ctx.groebnerOptions()) {
  for (const auto& g : gens) gb_.addInput(toModVec(g));
  gb_.run();
}

HilbertSeries SubmoduleGB::quotientSeries() const {
  return monomialModuleSeries(gb_.leadingMonomials(0, degrees_.size()), degrees_,
                              ctx_->ring().weights());
}

FreeVector SubmoduleGB::normalForm(const FreeVector& v) const {
  return toFreeVector(ctx_->ring(), gb_.normalForm(gb_.canonical(toModVec(v))), 0, degrees_.size());
}

bool SubmoduleGB::contains(const FreeVector& v) const {
  return gb_.reducesToZero(gb_.canonical(toModVec(v)));
}

Preimage::Preimage(const QuotientRingCtx& ctx, const Matrix& phi, const Matrix& w)
    : ctx_(&ctx),
      sourceDegrees_(phi.colDegrees()),
      targetRank_(phi.rows()),
      gb_(ModuleOrder(ctx.ring(), concat(phi.rowDegrees(), phi.colDegrees()),
                      ModuleOrder::Kind::TermOverPosition, phi.rows()),
          ctx.idealBasis(), ctx.groebnerOptions()) {
  if (w.rows() != phi.rows()) throw MismatchError("preimage: relation matrix has wrong row count");
  if (w.rowDegrees() != phi.rowDegrees()) throw MismatchError("preimage: row degrees differ");
  const auto n = static_cast<std::uint32_t>(phi.rows());
  for (std::size_t j = 0; j < phi.cols(); ++j) {
    ModVec v = toModVec(phi.column(j));
    v.push_back(ModTerm{ctx.ring().one(), n + static_cast<std::uint32_t>(j), 1});
    gb_.addInput(std::move(v));
  }
  for (std::size_t j = 0; j < w.cols(); ++j)
    if (!w.column(j).empty()) gb_.addInput(toModVec(w.column(j)));
  gb_.run();

  for (const auto& v : gb_.basis())
    if (v.front().comp >= n) kernel_.push_back(toFreeVector(ctx.ring(), v, n, phi.cols()));
  // Includes the leading terms of I*F, which lies in K implicitly.
  kernelLeads_ = gb_.leadingMonomials(n, n + phi.cols());
}

HilbertSeries Preimage::quotientSeries() const {
  return monomialModuleSeries(kernelLeads_, sourceDegrees_, ctx_->ring().weights());
}

Matrix Preimage::minimalKernelMatrix() const {
  ModuleGroebner mg(ModuleOrder(ctx_->ring(), sourceDegrees_), ctx_->idealBasis(),
                    ctx_->groebnerOptions());
  for (const auto& k : kernel_) mg.addInput(toModVec(k));
  mg.run();
  Matrix out(sourceDegrees_, {});
  for (std::size_t idx : mg.keptInputs()) {
    const FreeVector& k = kernel_[idx];
    int deg = k.front().value.degree() + sourceDegrees_[k.front().row];
    out.appendColumn(k, deg);
  }
  return out;
}

std::optional<FreeVector> Preimage::lift(const FreeVector& v) const {
  ModVec r = gb_.normalForm(gb_.canonical(toModVec(v)));
  const auto n = static_cast<std::uint32_t>(targetRank_);
  if (!r.empty() && r.front().comp < n) return std::nullopt;
  // r = v - sum c_t (phi_t + e_t) - w  => phi(-r) = v mod W.
  const FieldSpec& F = ctx_->ring().field();
  for (auto& t : r) t.coef = F.neg(t.coef);
  return toFreeVector(ctx_->ring(), r, n, sourceDegrees_.size());
}

Matrix minimalColumns(const QuotientRingCtx& ctx, const Matrix& m) {
  SubmoduleGB gb(ctx, m.rowDegrees(), m.columns());
  Matrix out(m.rowDegrees(), {});
  for (std::size_t idx : gb.minimalGenerators()) out.appendColumn(m.column(idx), m.colDegrees()[idx]);
  return out;
}

}  // namespace gorlab
