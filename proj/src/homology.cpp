#include "gorlab/errors.hpp"
#include "gorlab/resolution.hpp"

namespace gorlab {

namespace {

HilbertSeries zeroSeries(const QuotientRingCtx& ctx) {
  return HilbertSeries(LaurentPoly(), ctx.ring().weights());
}

// sum_a t^(sign*a) HS(N).
HilbertSeries shiftedCopies(const QuotientRingCtx& ctx, const HilbertSeries& n,
                            const std::vector<int>& twists, int sign) {
  LaurentPoly num;
  for (int a : twists) num += n.numerator().shifted(sign * a);
  return HilbertSeries(std::move(num), ctx.ring().weights());
}

struct Step {
  HilbertSeries series;
  std::optional<PresentedModule> module;
};

// Homology at a middle term coker(midRel) of  A -in-> B -out-> C  with C = coker(outRel);
// `in` and `out` may be absent (zero neighbours).
Step homologyAt(const CtxPtr& cp, const HilbertSeries& midSeries, const Matrix& midRel,
                const Matrix* in, const Matrix* out, const Matrix* outRel, bool withModule) {
  const QuotientRingCtx& ctx = *cp;
  if (midRel.rows() == 0) return Step{zeroSeries(ctx), withModule ? std::optional(PresentedModule::zero(cp)) : std::nullopt};
  HilbertSeries h = midSeries;
  std::optional<Preimage> outPre;
  if (out && out->rows() > 0 && out->cols() > 0) {
    outPre.emplace(ctx, *out, *outRel);
    h = seriesDifference(h, outPre->quotientSeries());
  }
  if (in && in->cols() > 0) h = seriesDifference(h, Preimage(ctx, *in, midRel).quotientSeries());
  Step s{h, std::nullopt};
  if (withModule) {
    Matrix kernel = outPre ? outPre->minimalKernelMatrix() : ctx.identity(midRel.rowDegrees());
    Matrix rels = in ? Matrix::hconcat(midRel, *in) : midRel;
    s.module = subquotient(cp, kernel, rels).module;
  }
  return s;
}

}  // namespace

std::optional<std::int64_t> ExtTorResult::length(int i) const {
  const HilbertSeries& h = series.at(static_cast<std::size_t>(i - lo));
  if (h.dimension() > 0) return std::nullopt;
  return h.length();
}

ExtTorResult ext(const PresentedModule& m, const PresentedModule& nIn, int lo, int hi,
                 bool withModules) {
  requireSameContext(m.ctx(), nIn.ctx());
  if (lo < 0) throw Error("ext: negative index");
  const CtxPtr& cp = m.ctxPtr();
  const QuotientRingCtx& ctx = *cp;
  PresentedModule n = minimalPresentation(nIn);
  const Matrix& B = n.relations();
  const auto& c = n.generatorTwists();
  const HilbertSeries hn = n.hilbertSeries();
  auto res = minimalFreeResolution(m, hi + 1);
  const FreeComplex& F = res->complex;

  ExtTorResult out;
  out.family = ExtTorResult::Family::Ext;
  out.lo = lo;
  out.hi = hi;
  for (int i = lo; i <= hi; ++i) {
    if (i > F.hi()) {
      out.series.push_back(zeroSeries(ctx));
      out.modules.push_back(withModules ? std::optional(PresentedModule::zero(cp)) : std::nullopt);
      continue;
    }
    std::vector<int> negA = F.twists(i);
    for (int& x : negA) x = -x;
    Matrix midRel = ctx.kronIdentityLeft(negA, B);
    HilbertSeries mid = shiftedCopies(ctx, hn, F.twists(i), -1);
    std::optional<Matrix> inMap, outMap, outRel;
    if (i >= 1) inMap = ctx.kronIdentityRight(F.d(i).transpose(), c);
    if (i + 1 <= F.hi()) {
      outMap = ctx.kronIdentityRight(F.d(i + 1).transpose(), c);
      std::vector<int> negB = F.twists(i + 1);
      for (int& x : negB) x = -x;
      outRel = ctx.kronIdentityLeft(negB, B);
    }
    Step s = homologyAt(cp, mid, midRel, inMap ? &*inMap : nullptr, outMap ? &*outMap : nullptr,
                        outRel ? &*outRel : nullptr, withModules);
    out.series.push_back(std::move(s.series));
    out.modules.push_back(std::move(s.module));
  }
  return out;
}

ExtTorResult tor(const PresentedModule& m, const PresentedModule& nIn, int lo, int hi,
                 bool withModules) {
  requireSameContext(m.ctx(), nIn.ctx());
  if (lo < 0) throw Error("tor: negative index");
  const CtxPtr& cp = m.ctxPtr();
  const QuotientRingCtx& ctx = *cp;
  PresentedModule n = minimalPresentation(nIn);
  const Matrix& B = n.relations();
  const auto& c = n.generatorTwists();
  const HilbertSeries hn = n.hilbertSeries();
  auto res = minimalFreeResolution(m, hi + 1);
  const FreeComplex& F = res->complex;

  ExtTorResult out;
  out.family = ExtTorResult::Family::Tor;
  out.lo = lo;
  out.hi = hi;
  for (int i = lo; i <= hi; ++i) {
    if (i > F.hi()) {
      out.series.push_back(zeroSeries(ctx));
      out.modules.push_back(withModules ? std::optional(PresentedModule::zero(cp)) : std::nullopt);
      continue;
    }
    Matrix midRel = ctx.kronIdentityLeft(F.twists(i), B);
    HilbertSeries mid = shiftedCopies(ctx, hn, F.twists(i), 1);
    std::optional<Matrix> inMap, outMap, outRel;
    if (i + 1 <= F.hi()) inMap = ctx.kronIdentityRight(F.d(i + 1), c);
    if (i >= 1) {
      outMap = ctx.kronIdentityRight(F.d(i), c);
      outRel = ctx.kronIdentityLeft(F.twists(i - 1), B);
    }
    Step s = homologyAt(cp, mid, midRel, inMap ? &*inMap : nullptr, outMap ? &*outMap : nullptr,
                        outRel ? &*outRel : nullptr, withModules);
    out.series.push_back(std::move(s.series));
    out.modules.push_back(std::move(s.module));
  }
  return out;
}

}  // namespace gorlab
