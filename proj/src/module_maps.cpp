#include <map>

#include "gorlab/errors.hpp"
#include "gorlab/module.hpp"

namespace gorlab {

namespace {

// a + p*b, reduced mod I.
FreeVector addScaled(const QuotientRingCtx& ctx, const FreeVector& a, const Polynomial& p,
                     const FreeVector& b) {
  const PolyRing& R = ctx.ring();
  std::map<std::uint32_t, Polynomial> acc;
  for (const auto& e : a) acc[e.row] = e.value;
  for (const auto& e : b) {
    Polynomial& slot = acc[e.row];
    slot = ctx.reduce(R.add(slot, R.mul(p, e.value)));
  }
  FreeVector out;
  for (auto& [r, v] : acc)
    if (!v.isZero()) out.push_back(Entry{r, std::move(v)});
  return out;
}

const Polynomial* entryAt(const FreeVector& v, std::uint32_t row) {
  for (const auto& e : v)
    if (e.row == row) return &e.value;
  return nullptr;
}

}  // namespace

MinimalPresentation minimize(const PresentedModule& m) {
  const QuotientRingCtx& ctx = m.ctx();
  const PolyRing& R = ctx.ring();
  const FieldSpec& F = R.field();
  const std::size_t n = m.numGenerators();

  std::vector<FreeVector> cols = m.relations().columns();
  std::vector<int> colDeg = m.relationTwists();
  std::vector<bool> alive(n, true);
  // Image of each old generator, in old row indices of surviving generators.
  std::vector<FreeVector> img(n);
  for (std::size_t j = 0; j < n; ++j) img[j] = FreeVector{Entry{static_cast<std::uint32_t>(j), R.constant(1)}};

  for (;;) {
    std::size_t pc = cols.size();
    std::uint32_t pr = 0;
    Coeff u = 0;
    for (std::size_t c = 0; c < cols.size() && pc == cols.size(); ++c)
      for (const auto& e : cols[c])
        if (R.isConstant(e.value)) {
          pc = c;
          pr = e.row;
          u = e.value.leading().coef;
          break;
        }
    if (pc == cols.size()) break;
    const FreeVector pivot = cols[pc];
    const Coeff ninv = F.neg(F.inv(u));
    // Clear row pr from every other column, and substitute e_pr in the images.
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c == pc) continue;
      if (const Polynomial* x = entryAt(cols[c], pr))
        cols[c] = addScaled(ctx, cols[c], R.scalarMul(ninv, *x), pivot);
    }
    for (auto& v : img)
      if (const Polynomial* x = entryAt(v, pr)) v = addScaled(ctx, v, R.scalarMul(ninv, *x), pivot);
    alive[pr] = false;
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(pc));
    colDeg.erase(colDeg.begin() + static_cast<std::ptrdiff_t>(pc));
  }

  std::vector<std::uint32_t> newIndex(n, 0);
  std::vector<int> newDeg;
  std::vector<std::size_t> survivors;
  for (std::size_t j = 0; j < n; ++j)
    if (alive[j]) {
      newIndex[j] = static_cast<std::uint32_t>(survivors.size());
      survivors.push_back(j);
      newDeg.push_back(m.generatorTwists()[j]);
    }
  auto relabel = [&](const FreeVector& v) {
    FreeVector out;
    for (const auto& e : v) {
      if (!alive[e.row]) throw Error("minimize: eliminated generator left behind");
      out.push_back(Entry{newIndex[e.row], e.value});
    }
    return out;
  };

  Matrix rel(newDeg, {});
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (!cols[c].empty()) rel.appendColumn(relabel(cols[c]), colDeg[c]);
  rel = minimalColumns(ctx, rel);

  Matrix toNew(newDeg, m.generatorTwists());
  for (std::size_t j = 0; j < n; ++j) toNew.setColumn(j, relabel(img[j]));
  Matrix fromNew(m.generatorTwists(), newDeg);
  for (std::size_t k = 0; k < survivors.size(); ++k)
    fromNew.setColumn(k, FreeVector{Entry{static_cast<std::uint32_t>(survivors[k]), R.constant(1)}});

  return MinimalPresentation{PresentedModule(m.ctxPtr(), std::move(rel)), std::move(toNew),
                             std::move(fromNew)};
}

PresentedModule minimalPresentation(const PresentedModule& m) { return minimize(m).module; }

Subquotient subquotient(const CtxPtr& ctx, const Matrix& gens, const Matrix& rels) {
  Preimage pre(*ctx, gens, rels);
  PresentedModule raw(ctx, pre.minimalKernelMatrix());
  MinimalPresentation mp = minimize(raw);
  Matrix inCover = ctx->multiply(gens, mp.fromNew);
  return Subquotient{std::move(mp.module), std::move(inCover)};
}

PresentedModule cokernel(const ModuleMap& f) {
  return minimalPresentation(
      PresentedModule(f.target().ctxPtr(), Matrix::hconcat(f.target().relations(), f.matrix())));
}

ModuleMap kernelInclusion(const ModuleMap& f) {
  Preimage pre(f.source().ctx(), f.matrix(), f.target().relations());
  Subquotient sq = subquotient(f.source().ctxPtr(), pre.minimalKernelMatrix(), f.source().relations());
  return ModuleMap(sq.module, f.source(), sq.gensInCover);
}

PresentedModule kernel(const ModuleMap& f) { return kernelInclusion(f).source(); }

PresentedModule image(const ModuleMap& f) {
  return subquotient(f.target().ctxPtr(), f.matrix(), f.target().relations()).module;
}

HilbertSeries homologySeries(const ModuleMap& f, const ModuleMap& g) {
  const QuotientRingCtx& ctx = g.source().ctx();
  HilbertSeries imG = Preimage(ctx, g.matrix(), g.target().relations()).quotientSeries();
  HilbertSeries imF = Preimage(ctx, f.matrix(), f.target().relations()).quotientSeries();
  return seriesDifference(seriesDifference(g.source().hilbertSeries(), imG), imF);
}

}  // namespace gorlab
