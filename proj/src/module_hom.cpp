#include "gorlab/errors.hpp"
#include "gorlab/module_ops.hpp"

namespace gorlab {

namespace {

std::vector<int> negated(std::vector<int> v) {
  for (int& x : v) x = -x;
  return v;
}

Matrix liftColumns(const Preimage& lifter, const std::vector<FreeVector>& targets,
                   const std::vector<int>& rowDegrees, const std::vector<int>& colDegrees) {
  Matrix out(rowDegrees, colDegrees);
  for (std::size_t c = 0; c < targets.size(); ++c) {
    auto l = lifter.lift(targets[c]);
    if (!l) throw Error("natural map: element does not lie in the target module");
    out.setColumn(c, std::move(*l));
  }
  return out;
}

}  // namespace

HomData homData(const PresentedModule& m, const PresentedModule& n) {
  requireSameContext(m.ctx(), n.ctx());
  const QuotientRingCtx& ctx = m.ctx();
  const CtxPtr& cp = m.ctxPtr();
  const std::vector<int> negA = negated(m.generatorTwists());
  Matrix w1 = ctx.kronIdentityLeft(negA, n.relations());
  const std::vector<int>& cover = w1.rowDegrees();
  if (cover.empty())
    return HomData{PresentedModule::zero(cp), Matrix(cover, {}), std::move(w1)};

  Matrix psi = ctx.kronIdentityRight(m.relations().transpose(), n.generatorTwists());
  Matrix w2 = ctx.kronIdentityLeft(negated(m.relationTwists()), n.relations());
  Matrix kgens = psi.rows() == 0 ? ctx.identity(cover)
                                 : Preimage(ctx, psi, w2).minimalKernelMatrix();
  Subquotient sq = subquotient(cp, kgens, w1);
  return HomData{std::move(sq.module), std::move(sq.gensInCover), std::move(w1)};
}

PresentedModule homModule(const PresentedModule& m, const PresentedModule& n) {
  return homData(m, n).module;
}

HomData dualData(const PresentedModule& m) {
  return homData(m, PresentedModule::free(m.ctxPtr(), {0}));
}

PresentedModule dualModule(const PresentedModule& m) { return dualData(m).module; }

PresentedModule tensorPresentation(const PresentedModule& m, const PresentedModule& n) {
  requireSameContext(m.ctx(), n.ctx());
  const QuotientRingCtx& ctx = m.ctx();
  Matrix left = ctx.kronIdentityRight(m.relations(), n.generatorTwists());
  Matrix right = ctx.kronIdentityLeft(m.generatorTwists(), n.relations());
  return PresentedModule(m.ctxPtr(), Matrix::hconcat(left, right));
}

PresentedModule tensorModule(const PresentedModule& m, const PresentedModule& n) {
  return minimalPresentation(tensorPresentation(m, n));
}

ModuleMap naturalMapTensorToHom(const PresentedModule& m, const PresentedModule& n) {
  HomData dual = dualData(m);
  HomData hom = homData(m, n);
  PresentedModule src = tensorPresentation(dual.module, n);
  const std::size_t p = n.numGenerators();
  std::vector<FreeVector> targets;
  for (std::size_t l = 0; l < dual.module.numGenerators(); ++l)
    for (std::size_t k = 0; k < p; ++k) {
      FreeVector v;
      for (const auto& e : dual.gensInCover.column(l))
        v.push_back(Entry{static_cast<std::uint32_t>(e.row * p + k), e.value});
      targets.push_back(std::move(v));
    }
  if (hom.module.numGenerators() == 0)
    return ModuleMap::zero(src, hom.module);
  Preimage lifter(m.ctx(), hom.gensInCover, hom.coverRelations);
  return ModuleMap(src, hom.module,
                   liftColumns(lifter, targets, hom.module.generatorTwists(), src.generatorTwists()));
}

ModuleMap naturalMapTensorToHomDual(const PresentedModule& m, const PresentedModule& n) {
  const QuotientRingCtx& ctx = m.ctx();
  const PolyRing& R = ctx.ring();
  HomData hom = homData(m, n);
  HomData homDual = dualData(hom.module);
  HomData nDual = dualData(n);
  PresentedModule src = tensorPresentation(m, nDual.module);
  const std::size_t p = n.numGenerators();
  const std::size_t q = hom.module.numGenerators();
  const std::size_t r = nDual.module.numGenerators();
  if (homDual.module.numGenerators() == 0) return ModuleMap::zero(src, homDual.module);

  // h[t][j*p + k]: the cover entries of the Hom generators.
  std::vector<std::vector<Polynomial>> h(q, std::vector<Polynomial>(hom.gensInCover.rows()));
  for (std::size_t t = 0; t < q; ++t)
    for (const auto& e : hom.gensInCover.column(t)) h[t][e.row] = e.value;

  std::vector<FreeVector> targets;
  for (std::size_t j = 0; j < m.numGenerators(); ++j)
    for (std::size_t l = 0; l < r; ++l) {
      FreeVector w;
      for (std::size_t t = 0; t < q; ++t) {
        Polynomial s;
        for (const auto& e : nDual.gensInCover.column(l))
          s = R.add(s, R.mul(e.value, h[t][j * p + e.row]));
        s = ctx.reduce(s);
        if (!s.isZero()) w.push_back(Entry{static_cast<std::uint32_t>(t), std::move(s)});
      }
      targets.push_back(std::move(w));
    }
  Preimage lifter(ctx, homDual.gensInCover, homDual.coverRelations);
  return ModuleMap(src, homDual.module,
                   liftColumns(lifter, targets, homDual.module.generatorTwists(),
                               src.generatorTwists()));
}

PresentedModule stableHom(const PresentedModule& m, const PresentedModule& n) {
  return cokernel(naturalMapTensorToHom(m, n));
}

}  // namespace gorlab
