#include "gorlab/errors.hpp"
#include "gorlab/limits.hpp"
#include "gorlab/resolution.hpp"

namespace gorlab {

namespace {

std::string resolutionKey(const PresentedModule& m) { return "res:" + m.toString(); }

// Minimal generators of the kernel of a map of free R-modules.
Matrix freeKernel(const QuotientRingCtx& ctx, const Matrix& d) {
  return Preimage(ctx, d, Matrix(d.rowDegrees(), {})).minimalKernelMatrix();
}

}  // namespace

std::shared_ptr<const Resolution> minimalFreeResolution(const PresentedModule& m, int length) {
  if (length < 0) throw Error("resolution length must be non-negative");
  const QuotientRingCtx& ctx = m.ctx();
  const std::string key = resolutionKey(m);
  auto cached = ctx.cache().find<Resolution>(key);
  if (cached && (cached->finite || cached->length() >= length)) return cached;

  std::vector<std::vector<int>> twists;
  std::vector<Matrix> ds;
  std::optional<PresentedModule> module;
  Matrix fromInput;
  bool finite = false;
  if (cached) {
    for (int i = 0; i <= cached->length(); ++i) twists.push_back(cached->complex.twists(i));
    for (int i = 1; i <= cached->length(); ++i) ds.push_back(cached->complex.d(i));
    module = cached->module;
    fromInput = cached->fromInput;
  } else {
    MinimalPresentation mp = minimize(m);
    module = mp.module;
    fromInput = mp.fromNew;
    twists.push_back(mp.module.generatorTwists());
  }
  if (module->numRelations() == 0) finite = true;
  while (!finite && static_cast<int>(twists.size()) <= length) {
    checkDeadline();
    if (ds.empty()) {
      twists.push_back(module->relationTwists());
      ds.push_back(module->relations());
      continue;
    }
    Matrix k = freeKernel(ctx, ds.back());
    if (k.cols() == 0) {
      finite = true;
      break;
    }
    twists.push_back(k.colDegrees());
    ds.push_back(std::move(k));
  }

  auto res = std::make_shared<const Resolution>(
      Resolution{FreeComplex(0, std::move(twists), std::move(ds)), *module, fromInput, finite});
  if (cached) {
    ctx.cache().assign<Resolution>(key, res);
    return res;
  }
  return ctx.cache().insert<Resolution>(key, res);
}

PresentedModule syzygy(const PresentedModule& m, int i) {
  if (i < 0) throw Error("syzygy index must be non-negative; use negativeSyzygy");
  auto res = minimalFreeResolution(m, i + 1);
  if (i == 0) return res->module;
  if (i > res->length()) return PresentedModule::zero(m.ctxPtr());
  if (i + 1 > res->length()) return PresentedModule::free(m.ctxPtr(), res->complex.twists(i));
  return PresentedModule(m.ctxPtr(), res->complex.d(i + 1));
}

}  // namespace gorlab
