#include "gorlab/module.hpp"

#include <mutex>

#include "gorlab/errors.hpp"

namespace gorlab {

struct PresentedModule::Lazy {
  std::once_flag once;
  std::unique_ptr<SubmoduleGB> gb;
};

PresentedModule::PresentedModule(CtxPtr ctx, Matrix relations)
    : ctx_(std::move(ctx)), lazy_(std::make_shared<Lazy>()) {
  if (!ctx_) throw Error("module without a ring context");
  relations.checkHomogeneous();
  rel_ = ctx_->reduce(relations);
}

PresentedModule PresentedModule::free(CtxPtr ctx, std::vector<int> twists) {
  return PresentedModule(std::move(ctx), Matrix(std::move(twists), {}));
}

PresentedModule PresentedModule::zero(CtxPtr ctx) { return free(std::move(ctx), {}); }

PresentedModule PresentedModule::cyclic(CtxPtr ctx, const std::vector<Polynomial>& ideal,
                                        int twist) {
  Matrix m({twist}, {});
  for (const auto& f : ideal) {
    if (f.isZero()) continue;
    m.appendColumn(FreeVector{Entry{0, f}}, twist + f.degree());
  }
  return PresentedModule(std::move(ctx), std::move(m));
}

PresentedModule PresentedModule::residueField(CtxPtr ctx) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ctx->ring().nvars(); ++i) vars.push_back(ctx->ring().variable(i));
  return cyclic(std::move(ctx), vars, 0);
}

const SubmoduleGB& PresentedModule::relationGB() const {
  std::call_once(lazy_->once, [&] {
    lazy_->gb = std::make_unique<SubmoduleGB>(*ctx_, rel_.rowDegrees(), rel_.columns());
  });
  return *lazy_->gb;
}

std::string PresentedModule::toString() const {
  const PolyRing& R = ctx_->ring();
  std::string s = "coker(gens {";
  for (std::size_t j = 0; j < numGenerators(); ++j) s += (j ? "," : "") + std::to_string(generatorTwists()[j]);
  s += "}; [";
  for (std::size_t c = 0; c < numRelations(); ++c) {
    s += c ? ", (" : "(";
    for (std::size_t r = 0; r < numGenerators(); ++r) {
      if (r) s += ", ";
      s += R.toString(rel_.at(r, c));
    }
    s += ")";
  }
  return s + "])";
}

ModuleMap::ModuleMap(PresentedModule source, PresentedModule target, Matrix matrix)
    : src_(std::move(source)), tgt_(std::move(target)), mat_(std::move(matrix)) {
  requireSameContext(src_.ctx(), tgt_.ctx());
  if (mat_.rowDegrees() != tgt_.generatorTwists() || mat_.colDegrees() != src_.generatorTwists())
    throw MismatchError("module map: matrix twists do not match source and target");
  mat_.checkHomogeneous();
  mat_ = src_.ctx().reduce(mat_);
  for (const auto& r : src_.relations().columns())
    if (!tgt_.isZeroElement(src_.ctx().apply(mat_, r)))
      throw MismatchError("module map is not well defined on the relations");
}

ModuleMap ModuleMap::identity(const PresentedModule& m) {
  return ModuleMap(m, m, m.ctx().identity(m.generatorTwists()));
}

ModuleMap ModuleMap::zero(const PresentedModule& source, const PresentedModule& target) {
  return ModuleMap(source, target, Matrix(target.generatorTwists(), source.generatorTwists()));
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  return ModuleMap(f.source(), g.target(), f.source().ctx().multiply(g.matrix(), f.matrix()));
}

bool isZeroMap(const ModuleMap& f) {
  for (const auto& c : f.matrix().columns())
    if (!f.target().isZeroElement(c)) return false;
  return true;
}

PresentedModule directSum(const PresentedModule& a, const PresentedModule& b) {
  requireSameContext(a.ctx(), b.ctx());
  return PresentedModule(a.ctxPtr(), Matrix::directSum(a.relations(), b.relations()));
}

PresentedModule twist(const PresentedModule& m, int d) {
  std::vector<int> rows = m.generatorTwists(), cols = m.relationTwists();
  for (int& x : rows) x -= d;
  for (int& x : cols) x -= d;
  Matrix out(rows, cols);
  for (std::size_t c = 0; c < m.numRelations(); ++c) out.setColumn(c, m.relations().column(c));
  return PresentedModule(m.ctxPtr(), std::move(out));
}

HilbertSeries seriesDifference(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.weights() != b.weights()) throw MismatchError("Hilbert series over different weights");
  LaurentPoly n = a.numerator();
  n -= b.numerator();
  return HilbertSeries(std::move(n), a.weights());
}

HilbertSeries seriesSum(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.weights() != b.weights()) throw MismatchError("Hilbert series over different weights");
  LaurentPoly n = a.numerator();
  n += b.numerator();
  return HilbertSeries(std::move(n), a.weights());
}

bool isZero(const PresentedModule& m) { return m.size().isZero(); }

bool isFree(const PresentedModule& m) { return minimalPresentation(m).numRelations() == 0; }

int dimModule(const PresentedModule& m) { return m.size().dim; }

std::optional<std::int64_t> lengthModule(const PresentedModule& m) {
  HilbertSeries h = m.hilbertSeries();
  if (h.dimension() > 0) return std::nullopt;
  return h.length();
}

}  // namespace gorlab
