#include <algorithm>
#include <random>

#include "gorlab/errors.hpp"
#include "gorlab/module_ops.hpp"
#include "gorlab/vanishing.hpp"

namespace gorlab {

namespace {

LaurentPoly oneMinusT(int e) {
  LaurentPoly p = LaurentPoly::monomial(0);
  p -= LaurentPoly::monomial(e);
  return p;
}

// x * identity on the generators of degrees a.
Matrix scalarColumns(const std::vector<int>& a, const Polynomial& x) {
  Matrix m(a, {});
  for (std::size_t j = 0; j < a.size(); ++j)
    m.appendColumn(FreeVector{Entry{static_cast<std::uint32_t>(j), x}}, a[j] + x.degree());
  return m;
}

std::vector<std::int64_t> hf(const HilbertSeries& h, int lo, int hi) { return h.hilbertFunction(lo, hi); }

std::int64_t at(const std::vector<std::int64_t>& v, int lo, int j) {
  const int k = j - lo;
  return k < 0 || k >= static_cast<int>(v.size()) ? 0 : v[static_cast<std::size_t>(k)];
}

}  // namespace

CtxPtr quotientBy(const CtxPtr& s, const Polynomial& x) {
  if (x.isZero()) throw HypothesisError("x is zero");
  std::vector<Polynomial> rels = s->relations();
  rels.push_back(x);
  CtxPtr r = QuotientRingCtx::create(s->ringPtr(), std::move(rels), s->degreeCap());
  if (r->hilbert().numerator() != s->hilbert().numerator() * oneMinusT(x.degree()))
    throw HypothesisError("x is not a nonzerodivisor");
  return r;
}

nlohmann::json ChangeOfRingsReport::toJson() const {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : checks)
    a.push_back({{"name", c.name}, {"index", c.index}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"verdict", toString(verdict)}, {"window", window}, {"shift", shift}, {"checks", a}};
}

ChangeOfRingsReport changeOfRingsConsistency(const CtxPtr& s, const Polynomial& x,
                                             const PresentedModule& m, const PresentedModule& n,
                                             int H) {
  CtxPtr r = quotientBy(s, s->reduce(x));
  if (!m.ctx().sameAs(*r) || !n.ctx().sameAs(*r))
    throw HypothesisError("modules must be given over S/(x)");
  const int e = x.degree();
  ChangeOfRingsReport rep;
  rep.window = H;
  rep.shift = e;
  auto overS = [&](const PresentedModule& q) {
    return PresentedModule(s, Matrix::hconcat(q.relations(), scalarColumns(q.generatorTwists(), x)));
  };
  PresentedModule mS = overS(m), nS = overS(n);
  ExtTorResult extR = ext(m, n, 0, H), extS = ext(mS, nS, 0, H);
  ExtTorResult torR = tor(m, n, 0, H), torS = tor(mS, nS, 0, H);
  const int lo = -(4 * H + 20), hi = 4 * H + 20;
  // Checked on [lo, hi]; the shifted reads at j +- e need a margin.
  const int plo = lo - e, phi = hi + e;
  auto add = [&](std::string name, int i, bool ok, std::string detail = {}) {
    if (!ok) rep.verdict = Verdict::Violation;
    rep.checks.push_back(CheckLine{std::move(name), i, ok, std::move(detail)});
  };

  // Ext^i_R -> Ext^i_S -> Ext^{i-1}_R(+e): dim Ext^i_S <= dim Ext^i_R + dim Ext^{i-1}_R
  // degree by degree, and likewise Tor_{i-1}^R(-e) -> Tor_i^S -> Tor_i^R.
  for (int i = 1; i <= H; ++i) {
    auto a = hf(extS.series[i], plo, phi), b = hf(extR.series[i], plo, phi),
         c = hf(extR.series[i - 1], plo, phi);
    bool ok = true;
    for (int j = lo; j <= hi; ++j) ok = ok && at(a, plo, j) <= at(b, plo, j) + at(c, plo, j + e);
    add("ext-sequence", i, ok);
    a = hf(torS.series[i], plo, phi);
    b = hf(torR.series[i], plo, phi);
    c = hf(torR.series[i - 1], plo, phi);
    ok = true;
    for (int j = lo; j <= hi; ++j) ok = ok && at(a, plo, j) <= at(b, plo, j) + at(c, plo, j - e);
    add("tor-sequence", i, ok);
  }
  // Where Ext^{i+1}_S = Ext^{i+2}_S = 0: Ext^i_R(+e) = Ext^{i+2}_R.
  for (int i = 0; i + 2 <= H; ++i) {
    if (!extS.isZero(i + 1) || !extS.isZero(i + 2)) continue;
    auto a = hf(extR.series[i], plo, phi), b = hf(extR.series[i + 2], plo, phi);
    bool ok = true;
    for (int j = lo; j <= hi; ++j) ok = ok && at(b, plo, j) == at(a, plo, j + e);
    add("periodicity", i, ok);
  }
  // Rees: x regular on the lift M' = coker_S(A) with M'/xM' = M.
  PresentedModule lift(s, m.relations());
  if (mS.hilbertSeries().numerator() == lift.hilbertSeries().numerator() * oneMinusT(e)) {
    ExtTorResult rees = ext(lift, nS, 0, H);
    for (int i = 0; i <= H; ++i)
      add("rees", i, hf(rees.series[i], lo, hi) == hf(extR.series[i], lo, hi));
  } else {
    rep.checks.push_back(CheckLine{"rees", -1, true, "x is a zerodivisor on the lift; skipped"});
  }
  return rep;
}

Polynomial ExternalTensor::mapLeft(const Polynomial& f) const {
  const PolyRing& A = a->ring();
  const PolyRing& L = left->ring();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<int> e(A.nvars(), 0);
    for (std::size_t i = 0; i < L.nvars(); ++i) e[i] = t.mono.exponent(i);
    terms.push_back(Term{A.monomial(e), t.coef});
  }
  return A.fromTerms(std::move(terms));
}

Polynomial ExternalTensor::mapRight(const Polynomial& f) const {
  const PolyRing& A = a->ring();
  const std::size_t off = left->ring().nvars();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<int> e(A.nvars(), 0);
    for (std::size_t i = 0; i < right->ring().nvars(); ++i) e[off + i] = t.mono.exponent(i);
    terms.push_back(Term{A.monomial(e), t.coef});
  }
  return A.fromTerms(std::move(terms));
}

namespace {

template <class F>
PresentedModule transport(const CtxPtr& a, const PresentedModule& m, F map) {
  const Matrix& rel = m.relations();
  Matrix out(rel.rowDegrees(), {});
  for (std::size_t c = 0; c < rel.cols(); ++c) {
    FreeVector col;
    for (const auto& en : rel.column(c)) col.push_back(Entry{en.row, map(en.value)});
    out.appendColumn(std::move(col), rel.colDegrees()[c]);
  }
  return PresentedModule(a, std::move(out));
}

}  // namespace

PresentedModule ExternalTensor::fromLeft(const PresentedModule& m) const {
  requireSameContext(m.ctx(), *left);
  return transport(a, m, [this](const Polynomial& f) { return mapLeft(f); });
}

PresentedModule ExternalTensor::fromRight(const PresentedModule& n) const {
  requireSameContext(n.ctx(), *right);
  return transport(a, n, [this](const Polynomial& f) { return mapRight(f); });
}

ExternalTensor externalTensor(const CtxPtr& r, const CtxPtr& s) {
  const PolyRing& L = r->ring();
  const PolyRing& Rr = s->ring();
  if (!(L.field() == Rr.field())) throw MismatchError("external tensor needs a common field");
  std::vector<std::string> vars = L.variables();
  std::vector<int> weights = L.weights();
  for (std::size_t i = 0; i < Rr.nvars(); ++i) {
    std::string v = Rr.variables()[i];
    while (std::find(vars.begin(), vars.end(), v) != vars.end()) v += "_2";
    vars.push_back(v);
    weights.push_back(Rr.weights()[i]);
  }
  auto ring = std::make_shared<const PolyRing>(L.field(), vars, L.order(), weights);
  ExternalTensor t;
  t.left = r;
  t.right = s;
  // Temporary context to make the maps usable while collecting relations.
  t.a = QuotientRingCtx::create(ring, {}, std::max(r->degreeCap(), s->degreeCap()));
  std::vector<Polynomial> rels;
  for (const auto& f : r->relations()) rels.push_back(t.mapLeft(f));
  for (const auto& f : s->relations()) rels.push_back(t.mapRight(f));
  t.a = QuotientRingCtx::create(ring, std::move(rels), std::max(r->degreeCap(), s->degreeCap()));
  return t;
}

nlohmann::json Prop43Report::toJson() const {
  return {{"verdict", toString(verdict)}, {"gorenstein", gorenstein}, {"pattern", pattern.toJson()}};
}

Prop43Report prop43Check(const ExternalTensor& t, const PresentedModule& mR,
                         const PresentedModule& nS, int H) {
  Prop43Report rep;
  rep.gorenstein = gorensteinCheck(t.left) && gorensteinCheck(t.right) && gorensteinCheck(t.a);
  if (!gorensteinCheck(t.left) || !gorensteinCheck(t.right)) {
    rep.verdict = Verdict::HypothesisFailure;
    return rep;
  }
  rep.pattern = scanExt(t.fromLeft(mR), t.fromRight(nS), H, ScanMode::Decisive);
  rep.pattern.left = "M(x)S";
  rep.pattern.right = "R(x)N";
  if (!rep.gorenstein || !rep.pattern.tailVanishing) rep.verdict = Verdict::Violation;
  return rep;
}

namespace {

void monomialsOfWeight(const PolyRing& R, int d, std::size_t i, std::vector<int>& e,
                       std::vector<Monomial>& out) {
  if (i == R.nvars()) {
    if (d == 0) out.push_back(R.monomial(e));
    return;
  }
  const int w = R.weights()[i];
  for (int k = 0; k * w <= d; ++k) {
    e[i] = k;
    monomialsOfWeight(R, d - k * w, i + 1, e, out);
  }
  e[i] = 0;
}

// Monomials of degree d outside the initial ideal.
std::vector<Monomial> standardMonomials(const QuotientRingCtx& ctx, int d) {
  std::vector<Monomial> all, out;
  std::vector<int> e(ctx.ring().nvars(), 0);
  if (d >= 0) monomialsOfWeight(ctx.ring(), d, 0, e, all);
  for (const auto& m : all) {
    bool standard = true;
    for (const auto& g : ctx.idealBasis())
      if (g.leading().mono.divides(m)) standard = false;
    if (standard) out.push_back(m);
  }
  return out;
}

}  // namespace

PresentedModule randomModule(const ExperimentConfig& cfg, const CtxPtr& ctx, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 rng(seq);
  const PolyRing& R = ctx->ring();
  std::uniform_int_distribution<int> ng(1, std::max(1, cfg.maxGenerators));
  std::uniform_int_distribution<int> nr(0, std::max(0, cfg.maxRelations));
  std::uniform_int_distribution<int> tw(0, 1), rd(1, std::max(1, cfg.maxRelationDegree)), coin(0, 1),
      terms(1, 2);
  std::uniform_int_distribution<Coeff> coef(1, R.field().modulus() - 1);
  std::vector<int> a(static_cast<std::size_t>(ng(rng)));
  for (int& x : a) x = tw(rng);
  const int top = *std::max_element(a.begin(), a.end());
  Matrix m(a, {});
  const int rels = nr(rng);
  for (int c = 0; c < rels; ++c) {
    const int b = top + rd(rng);
    FreeVector col;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (coin(rng) == 0 || b - a[j] > cfg.maxRelationDegree) continue;
      auto pool = standardMonomials(*ctx, b - a[j]);
      if (pool.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      std::vector<Term> ts;
      for (int k = terms(rng); k > 0; --k) ts.push_back(Term{pool[pick(rng)], coef(rng)});
      Polynomial p = ctx->reduce(R.fromTerms(std::move(ts)));
      if (!p.isZero()) col.push_back(Entry{static_cast<std::uint32_t>(j), std::move(p)});
    }
    if (!col.empty()) m.appendColumn(std::move(col), b);
  }
  return PresentedModule(ctx, std::move(m));
}

PresentedModule randomMCMModule(const ExperimentConfig& cfg, const CtxPtr& ctx, std::uint64_t stream) {
  PresentedModule m = randomModule(cfg, ctx, stream);
  const int d = ctx->dim();
  return d > 0 ? minimalPresentation(syzygy(m, d)) : m;
}

nlohmann::json SearchReport::toJson() const {
  nlohmann::json trialsJson = nlohmann::json::array();
  for (const auto& t : trials)
    trialsJson.push_back({{"trial", t.trial}, {"mFree", t.mFree}, {"nFree", t.nFree},
                          {"pattern", t.pattern.toJson()}});
  return {{"seed", config.seed},  {"window", config.window}, {"trialCount", config.trials},
          {"ringDim", ringDim},   {"trials", trialsJson},    {"candidates", candidates},
          {"note", "candidates are window-bounded observations, not counterexamples"}};
}

SearchReport searchHarness(const ExperimentConfig& cfg, const CtxPtr& ctx) {
  SearchReport rep;
  rep.config = cfg;
  rep.ringDim = ctx->dim();
  for (int t = 0; t < cfg.trials; ++t) {
    PresentedModule m = randomModule(cfg, ctx, 2 * static_cast<std::uint64_t>(t));
    PresentedModule n = randomModule(cfg, ctx, 2 * static_cast<std::uint64_t>(t) + 1);
    SearchTrial st;
    st.trial = t;
    st.mFree = isFree(m);
    st.nFree = isFree(n);
    st.pattern = scanExt(m, n, cfg.window);
    if (st.pattern.settled() && st.pattern.lastNonzero > rep.ringDim)
      rep.candidates.push_back("trial " + std::to_string(t) + "\nM = " + replayText(m) +
                               "\nN = " + replayText(n));
    rep.trials.push_back(std::move(st));
  }
  return rep;
}

}  // namespace gorlab
