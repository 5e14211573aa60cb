#include "gorlab/errors.hpp"
#include "gorlab/module_ops.hpp"
#include "gorlab/resolution.hpp"

namespace gorlab {

namespace {

std::vector<int> negated(std::vector<int> v) {
  for (int& x : v) x = -x;
  return v;
}

// Twists of position i in a resolution (empty past a finite end).
std::vector<int> twistsAt(const Resolution& r, int i) {
  return i <= r.complex.hi() ? r.complex.twists(i) : std::vector<int>{};
}

Matrix diffAt(const Resolution& r, int i) {
  if (i <= r.complex.hi()) return r.complex.d(i);
  return Matrix(twistsAt(r, i - 1), twistsAt(r, i));
}

void requireCompleteHypotheses(const PresentedModule& m) {
  if (!gorensteinCheck(m.ctxPtr())) throw HypothesisError("context is not Gorenstein");
  if (!isMCM(m)) throw HypothesisError("module is not maximal Cohen-Macaulay");
}

}  // namespace

CompleteResolution completeResolution(const PresentedModule& m, int t, int n) {
  if (t < 1 || n < 0) throw Error("complete resolution window must be [-t, n] with t >= 1, n >= 0");
  requireCompleteHypotheses(m);
  const QuotientRingCtx& ctx = m.ctx();
  auto F = minimalFreeResolution(m, n);
  HomData dual = dualData(F->module);
  auto G = minimalFreeResolution(dual.module, t - 1);
  // G_0 generators as functionals on F_0.
  Matrix g0 = ctx.multiply(dual.gensInCover, G->fromInput);

  std::vector<std::vector<int>> twists;
  std::vector<Matrix> ds;
  for (int i = -t; i <= n; ++i) {
    if (i >= 0) {
      twists.push_back(twistsAt(*F, i));
      if (i == 0) ds.push_back(g0.transpose());
      else ds.push_back(diffAt(*F, i));
    } else {
      int j = -i - 1;  // C_i = G_j^*
      twists.push_back(negated(twistsAt(*G, j)));
      if (i > -t) ds.push_back(diffAt(*G, j + 1).transpose());
    }
  }
  return CompleteResolution{FreeComplex(-t, std::move(twists), std::move(ds)), 0};
}

PresentedModule negativeSyzygy(const PresentedModule& m, int i) {
  if (i > -1) throw Error("negative syzygy index must be <= -1");
  CompleteResolution c = completeResolution(m, -i, 0);
  // M_i = image(C_i -> C_{i-1}) = coker(C_{i+1} -> C_i).
  return minimalPresentation(PresentedModule(m.ctxPtr(), c.complex.d(i + 1)));
}

namespace {

void requireConversionWindow(int lo, int hi, int t) {
  if (t < 3 || lo < 1 || hi > t - 2)
    throw Error("complete-resolution window too small: need 1 <= i <= t - 2 with t >= 3");
}

}  // namespace

ExtTorResult extViaComplete(const PresentedModule& m, const PresentedModule& n, int lo, int hi,
                            int t) {
  requireConversionWindow(lo, hi, t);
  requireCompleteHypotheses(m);
  PresentedModule x = negativeSyzygy(dualModule(m), -t);
  ExtTorResult r = tor(x, n, t - hi - 1, t - lo - 1);
  ExtTorResult out;
  out.family = ExtTorResult::Family::Ext;
  out.lo = lo;
  out.hi = hi;
  for (int i = lo; i <= hi; ++i) {
    out.series.push_back(r.series.at(static_cast<std::size_t>(t - i - 1 - r.lo)));
    out.modules.push_back(std::nullopt);
  }
  return out;
}

ExtTorResult torViaComplete(const PresentedModule& m, const PresentedModule& n, int lo, int hi,
                            int t) {
  requireConversionWindow(lo, hi, t);
  requireCompleteHypotheses(m);
  PresentedModule x = negativeSyzygy(dualModule(m), -t);
  ExtTorResult r = ext(x, n, t - hi - 1, t - lo - 1);
  ExtTorResult out;
  out.family = ExtTorResult::Family::Tor;
  out.lo = lo;
  out.hi = hi;
  for (int i = lo; i <= hi; ++i) {
    out.series.push_back(r.series.at(static_cast<std::size_t>(t - i - 1 - r.lo)));
    out.modules.push_back(std::nullopt);
  }
  return out;
}

int depth(const PresentedModule& m) {
  if (isZero(m)) throw HypothesisError("depth of the zero module");
  PresentedModule k = PresentedModule::residueField(m.ctxPtr());
  const int d = m.ctx().dim();
  for (int i = 0; i <= d; ++i)
    if (!ext(k, m, i, i).isZero(i)) return i;
  throw Error("depth: no nonvanishing Ext up to the ring dimension");
}

bool isMCM(const PresentedModule& m) {
  if (isZero(m)) return true;
  return depth(m) == m.ctx().dim();
}

bool gorensteinCheck(const CtxPtr& ctx) {
  const std::string key = "gorenstein";
  if (auto hit = ctx->cache().find<bool>(key)) return *hit;
  bool ok;
  PresentedModule R = PresentedModule::free(ctx, {0});
  const int d = ctx->dim();
  if (d == 0) {
    ok = lengthModule(socle(R)) == 1;
  } else {
    ExtTorResult e = ext(PresentedModule::residueField(ctx), R, 0, d);
    ok = true;
    for (int i = 0; i < d && ok; ++i) ok = e.isZero(i);
    ok = ok && e.length(d) == 1;
  }
  return *ctx->cache().insert<bool>(key, std::make_shared<const bool>(ok));
}

}  // namespace gorlab
