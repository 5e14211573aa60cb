#include "gorlab/errors.hpp"
#include "gorlab/module_ops.hpp"
#include "gorlab/vanishing.hpp"

namespace gorlab {

namespace {

VanishingPattern labelled(VanishingPattern p, std::string l, std::string r) {
  p.left = std::move(l);
  p.right = std::move(r);
  return p;
}

bool allAgree(const std::vector<VanishingPattern>& ps) {
  for (const auto& p : ps)
    if (p.tailVanishing != ps.front().tailVanishing) return false;
  return true;
}

nlohmann::json patternsJson(const std::vector<VanishingPattern>& ps) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& p : ps) a.push_back(p.toJson());
  return a;
}

nlohmann::json optionalSizes(const std::vector<std::optional<ModuleSize>>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& s : v) {
    if (!s) a.push_back(nullptr);
    else if (s->isZero()) a.push_back(0);
    else a.push_back(s->toString());
  }
  return a;
}

}  // namespace

nlohmann::json Theorem21Report::toJson() const {
  return {{"verdict", toString(verdict)}, {"note", note}, {"window", window},
          {"patterns", patternsJson(patterns)}};
}

Theorem21Report theorem21Check(const PresentedModule& m, const PresentedModule& n, int H,
                               bool skipMcmCheck) {
  Theorem21Report r;
  r.window = H;
  const bool mcm = isMCM(m) && isMCM(n);
  if (!mcm && !skipMcmCheck) {
    r.verdict = Verdict::HypothesisFailure;
    r.note = "M and N must be maximal Cohen-Macaulay";
    return r;
  }
  r.patterns.push_back(labelled(scanTor(m, n, H, ScanMode::Decisive), "M", "N"));
  r.patterns.push_back(labelled(scanExt(m, dualModule(n), H, ScanMode::Decisive), "M", "N*"));
  r.patterns.push_back(labelled(scanExt(n, dualModule(m), H, ScanMode::Decisive), "N", "M*"));
  const bool agree = allAgree(r.patterns);
  if (mcm) {
    r.verdict = agree ? Verdict::Consistent : Verdict::Violation;
  } else {
    r.verdict = agree ? Verdict::Consistent : Verdict::HypothesisFailure;
    r.note = agree ? "MCM check bypassed" : "MCM check bypassed; the equivalence fails here";
  }
  return r;
}

Theorem21Report corollary42Check(const PresentedModule& m, const PresentedModule& n, int H) {
  Theorem21Report r;
  r.window = H;
  if (!isMCM(m) || !isMCM(n)) {
    r.verdict = Verdict::HypothesisFailure;
    r.note = "M and N must be maximal Cohen-Macaulay";
    return r;
  }
  r.patterns.push_back(labelled(scanTor(m, n, H, ScanMode::Decisive), "M", "N"));
  r.patterns.push_back(labelled(scanExt(dualModule(m), n, H, ScanMode::Decisive), "M*", "N"));
  r.patterns.push_back(labelled(scanExt(dualModule(n), m, H, ScanMode::Decisive), "N*", "M"));
  r.verdict = allAgree(r.patterns) ? Verdict::Consistent : Verdict::Violation;
  return r;
}

nlohmann::json SymmetryReport::toJson() const {
  nlohmann::json j{{"verdict", toString(verdict)}, {"window", window}, {"rechecked", rechecked},
                   {"forward", forward.toJson()},  {"backward", backward.toJson()}};
  if (!replay.empty()) j["replay"] = replay;
  return j;
}

SymmetryReport symmetryCheck(const PresentedModule& m, const PresentedModule& n, int H) {
  SymmetryReport r;
  auto run = [&](int h) {
    r.window = h;
    r.forward = labelled(scanExt(m, n, h, ScanMode::Decisive), "M", "N");
    r.backward = labelled(scanExt(n, m, h, ScanMode::Decisive), "N", "M");
    return r.forward.tailVanishing == r.backward.tailVanishing;
  };
  if (run(H)) return r;
  r.rechecked = true;
  if (run(H + 4)) return r;
  r.verdict = Verdict::Violation;
  r.replay = "M = " + replayText(m) + "\nN = " + replayText(n);
  return r;
}

void requireMinimalMultiplicity(const CtxPtr& ctx) {
  if (ctx->dim() != 0) throw HypothesisError("context is not artinian");
  if (!gorensteinCheck(ctx)) throw HypothesisError("context is not Gorenstein");
  const int e = ctx->embeddingDimension();
  if (ctx->hilbert().length() != e + 2)
    throw HypothesisError("length " + std::to_string(ctx->hilbert().length()) +
                          " differs from embdim + 2 = " + std::to_string(e + 2));
  if (e <= 2) throw HypothesisError("embedding dimension must exceed 2");
}

nlohmann::json LescotReport::toJson() const {
  return {{"verdict", toString(verdict)}, {"n", n},           {"s", s},
          {"b0", b0},                     {"expected", expected}, {"actual", actual},
          {"holds", holds}};
}

LescotReport lescotCheck(const PresentedModule& m) {
  requireMinimalMultiplicity(m.ctxPtr());
  LescotReport r;
  PresentedModule m1 = minimalPresentation(syzygy(m, 1));
  auto res = minimalFreeResolution(m1, 3);
  const std::int64_t n = m.ctx().embeddingDimension();
  r.n = static_cast<int>(n);
  r.b0 = res->betti().total(0);
  r.s = *lengthModule(m1) - r.b0;
  const std::int64_t b0 = r.b0, s = r.s;
  r.expected = {n * b0 - s, b0 * (n * n - 1) - s * n, b0 * (n * n * n - 2 * n) - s * (n * n - 1)};
  for (int i = 1; i <= 3; ++i) {
    r.actual.push_back(res->betti().total(i));
    r.holds.push_back(r.actual.back() == r.expected[static_cast<std::size_t>(i - 1)]);
  }
  for (bool h : r.holds)
    if (!h) r.verdict = Verdict::NotEstablished;
  return r;
}

nlohmann::json Lemma36Report::toJson() const {
  return {{"verdict", toString(verdict)}, {"mFree", mFree}, {"nFree", nFree},
          {"tor3to5", optionalSizes(tor)}};
}

Lemma36Report lemma36Check(const PresentedModule& m, const PresentedModule& n) {
  requireSameContext(m.ctx(), n.ctx());
  requireMinimalMultiplicity(m.ctxPtr());
  Lemma36Report r;
  r.tor.assign(3, std::nullopt);
  r.mFree = isFree(m);
  r.nFree = isFree(n);
  if (r.mFree || r.nFree) return r;
  for (int i = 3; i <= 5; ++i) {
    r.tor[static_cast<std::size_t>(i - 3)] = tor(m, n, i, i).size(i);
    if (!r.tor[static_cast<std::size_t>(i - 3)]->isZero()) return r;
  }
  r.verdict = Verdict::Violation;
  return r;
}

nlohmann::json Theorem59Report::toJson() const {
  nlohmann::json j{{"verdict", toString(verdict)},
                   {"tensorMCM", tensorMCM},
                   {"extVanish", extVanish},
                   {"extFiniteLength", extFiniteLength},
                   {"note", note}};
  j["homMCM"] = homMCM ? nlohmann::json(*homMCM) : nlohmann::json(nullptr);
  j["dualSeriesMatch"] = dualSeriesMatch ? nlohmann::json(*dualSeriesMatch) : nlohmann::json(nullptr);
  return j;
}

Theorem59Report theorem59Check(const PresentedModule& m, const PresentedModule& n) {
  requireSameContext(m.ctx(), n.ctx());
  Theorem59Report r;
  if (!gorensteinCheck(m.ctxPtr()) || !isMCM(m) || !isMCM(n)) {
    r.verdict = Verdict::HypothesisFailure;
    r.note = "needs a Gorenstein context and MCM modules";
    return r;
  }
  const int d = m.ctx().dim();
  PresentedModule t = tensorModule(dualModule(m), n);
  r.tensorMCM = isMCM(t);
  r.extVanish = true;
  r.extFiniteLength = true;
  if (d > 0) {
    ExtTorResult e = ext(n, m, 1, d);
    for (int i = 1; i <= d; ++i) {
      r.extVanish = r.extVanish && e.isZero(i);
      r.extFiniteLength = r.extFiniteLength && e.size(i).finiteLength();
    }
  }
  if (r.extVanish && !r.tensorMCM) {
    r.verdict = Verdict::Violation;
    r.note = "(2) holds but (1) fails";
  }
  if (r.extFiniteLength && r.tensorMCM && !r.extVanish) {
    r.verdict = Verdict::Violation;
    r.note = "(1) holds, Ext has finite length, but (2) fails";
  }
  if (r.tensorMCM) {
    PresentedModule h = homModule(n, m);
    r.homMCM = isMCM(h);
    r.dualSeriesMatch = t.hilbertSeries() == dualModule(h).hilbertSeries();
    if (!*r.homMCM || !*r.dualSeriesMatch) {
      r.verdict = Verdict::Violation;
      r.note = "(1) holds but Hom(N,M) or Hom(N,M)* disagrees";
    }
  }
  return r;
}

}  // namespace gorlab
