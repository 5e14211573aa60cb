#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "gorlab/errors.hpp"
#include "gorlab/limits.hpp"
#include "gorlab/module_ops.hpp"
#include "gorlab/script.hpp"
#include "gorlab/vanishing.hpp"

namespace gorlab::script {

namespace {

constexpr const char* kEngine = "gorlab 0.1.0";

std::string where(Loc at) {
  return "line " + std::to_string(at.line) + ", column " + std::to_string(at.column);
}

// Type errors are reported like syntax errors.
[[noreturn]] void typeError(const std::string& msg, Loc at) {
  throw ParseError(where(at) + ": " + msg, 0, at.line, at.column);
}

struct Value {
  std::optional<PresentedModule> module;
  CtxPtr ring;  // set for ring names
  std::optional<std::int64_t> integer;
  std::optional<std::string> text;
  std::int64_t lo = 0, hi = 0;
  bool range = false;
};

std::string sizeText(const ModuleSize& s) {
  if (s.isZero()) return "0";
  if (s.finiteLength()) return std::to_string(s.multiplicity);
  return "dim " + std::to_string(s.dim) + ", mult " + std::to_string(s.multiplicity);
}

nlohmann::json sizeJson(const ModuleSize& s) {
  if (s.isZero()) return 0;
  if (s.finiteLength()) return s.multiplicity;
  return nlohmann::json{{"dim", s.dim}, {"multiplicity", s.multiplicity}};
}

std::string patternLine(const VanishingPattern& p) {
  std::ostringstream o;
  o << p.family << "(" << p.left << ", " << p.right << ") [";
  for (std::size_t i = 0; i < p.sizes.size(); ++i) {
    if (i) o << ' ';
    o << (p.sizes[i] ? sizeText(*p.sizes[i]) : "?");
  }
  o << "] tail " << (p.tailVanishing ? "vanishes" : "nonzero");
  const bool complete = std::all_of(p.sizes.begin(), p.sizes.end(), [](const auto& x) { return x.has_value(); });
  if (p.tailVanishing || complete) o << ", last nonzero " << p.lastNonzero;
  return o.str();
}

class Runner {
 public:
  explicit Runner(const RunOptions& o) : opts_(o) {}

  RunReport run(const Script& s) {
    report_ = {{"schema", "gorlab.run/1"},
               {"engine", kEngine},
               {"script", opts_.scriptName},
               {"seed", opts_.seed},
               {"window", opts_.window},
               {"degreeCap", opts_.degreeCap},
               {"results", nlohmann::json::array()}};
    if (opts_.timeoutSecs)
      setDeadline(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(*opts_.timeoutSecs)));
    int code = kOk;
    try {
      for (const auto& st : s.statements) statement(st);
    } catch (const ParseError& e) {
      code = fail(kParse, "parse", e.what());
    } catch (const HypothesisError& e) {
      code = fail(kHypothesis, "hypothesis", e.what());
    } catch (const ResourceCapExceeded& e) {
      code = fail(kResource, "resource", e.what());
    } catch (const DegreeCapExceeded& e) {
      code = fail(kResource, "resource", e.what());
    } catch (const Error& e) {
      code = fail(kError, "error", e.what());
    }
    setDeadline(std::nullopt);
    if (code == kOk) code = violations_ ? kViolation : (hypothesisFailures_ ? kHypothesis : kOk);
    report_["violations"] = violations_;
    report_["hypothesisFailures"] = hypothesisFailures_;
    report_["exitCode"] = code;
    return RunReport{report_, code};
  }

 private:
  int fail(int code, const char* kind, const std::string& what) {
    std::string msg = what;
    if (current_ && msg.rfind("line ", 0) != 0) msg = where(current_->loc) + ": " + msg;
    report_["error"] = {{"kind", kind}, {"message", msg}};
    if (current_) report_["error"]["statement"] = current_->source;
    say("error: " + msg);
    return code;
  }

  void say(const std::string& line) {
    if (opts_.out && !opts_.json) *opts_.out << line << '\n';
  }

  CtxPtr currentRing(Loc at) const {
    if (!current_ring_) typeError("no ring declared", at);
    return current_ring_;
  }

  void statement(const Statement& st) {
    current_ = &st;
    checkDeadline();
    switch (st.kind) {
      case Statement::Kind::Ring: declareRing(st); break;
      case Statement::Kind::Module: declareModule(st); break;
      case Statement::Kind::Let: values_[st.name] = eval(st.expr); break;
      case Statement::Kind::Command: command(st); break;
      case Statement::Kind::Emit: emit(st); break;
    }
    current_ = nullptr;
  }

  Polynomial poly(const PolyRing& ring, const PolyText& p) const {
    try {
      return ring.parseHomogeneous(p.text);
    } catch (const ParseError& e) {
      typeError(std::string("bad polynomial '") + p.text + "': " + e.what(), p.loc);
    } catch (const InhomogeneousError& e) {
      typeError(std::string("polynomial '") + p.text + "' is not homogeneous", p.loc);
    }
  }

  void declareRing(const Statement& st) {
    auto ring = std::make_shared<const PolyRing>(FieldSpec(st.prime), st.variables);
    std::vector<Polynomial> rels;
    for (const auto& r : st.relations) rels.push_back(poly(*ring, r));
    CtxPtr ctx = QuotientRingCtx::create(ring, std::move(rels), opts_.degreeCap);
    Value v;
    v.ring = ctx;
    values_[st.name] = v;
    current_ring_ = ctx;
  }

  void declareModule(const Statement& st) {
    CtxPtr ctx = ringNamed(st.ringName, st.loc);
    const PolyRing& R = ctx->ring();
    std::vector<int> rowDeg = st.rowDegrees;
    if (rowDeg.empty()) rowDeg.assign(st.rows.size(), 0);
    const std::size_t nc = st.rows.front().size();
    std::vector<FreeVector> cols(nc);
    std::vector<std::optional<int>> colDeg(nc);
    for (std::size_t r = 0; r < st.rows.size(); ++r)
      for (std::size_t c = 0; c < nc; ++c) {
        Polynomial p = ctx->reduce(poly(R, st.rows[r][c]));
        if (p.isZero()) continue;
        const int d = rowDeg[r] + p.degree();
        if (colDeg[c] && *colDeg[c] != d)
          typeError("column " + std::to_string(c + 1) + " is not homogeneous", st.rows[r][c].loc);
        colDeg[c] = d;
        cols[c].push_back(Entry{static_cast<std::uint32_t>(r), std::move(p)});
      }
    Matrix m(rowDeg, {});
    for (std::size_t c = 0; c < nc; ++c)
      if (colDeg[c]) m.appendColumn(std::move(cols[c]), *colDeg[c]);
    Value v;
    v.module = PresentedModule(ctx, std::move(m));
    values_[st.name] = v;
  }

  CtxPtr ringNamed(const std::string& name, Loc at) {
    auto it = values_.find(name);
    if (it != values_.end()) {
      if (!it->second.ring) typeError("'" + name + "' is not a ring", at);
      return it->second.ring;
    }
    if (name == "R") return currentRing(at);
    typeError("undefined ring '" + name + "'", at);
  }

  Value eval(const Expr& e) {
    Value v;
    switch (e.kind) {
      case Expr::Kind::Int: v.integer = e.lo; return v;
      case Expr::Kind::String: v.text = e.text; return v;
      case Expr::Kind::Range:
        v.range = true;
        v.lo = e.lo;
        v.hi = e.hi;
        return v;
      case Expr::Kind::Name: {
        auto it = values_.find(e.text);
        if (it != values_.end()) return it->second;
        if (e.text == "k") {
          v.module = PresentedModule::residueField(currentRing(e.loc));
          return v;
        }
        if (e.text == "R") {
          v.ring = currentRing(e.loc);
          return v;
        }
        typeError("undefined identifier '" + e.text + "'", e.loc);
      }
      case Expr::Kind::Call: break;
    }
    return call(e);
  }

  PresentedModule mod(const Expr& e) {
    Value v = eval(e);
    if (v.module) return *v.module;
    if (v.ring) return PresentedModule::free(v.ring, {0});
    typeError("expected a module", e.loc);
  }

  std::int64_t num(const Expr& e) {
    Value v = eval(e);
    if (!v.integer) typeError("expected an integer", e.loc);
    return *v.integer;
  }

  CtxPtr ring(const Expr& e) {
    Value v = eval(e);
    if (v.ring) return v.ring;
    if (v.module) return v.module->ctxPtr();
    typeError("expected a ring", e.loc);
  }

  std::pair<std::int64_t, std::int64_t> range(const Expr& e) {
    Value v = eval(e);
    if (v.range) return {v.lo, v.hi};
    if (v.integer) return {*v.integer, *v.integer};
    typeError("expected a range lo..hi", e.loc);
  }

  int window(const Expr& call, std::size_t idx) {
    return idx < call.args.size() ? static_cast<int>(num(call.args[idx])) : opts_.window;
  }

  ExperimentConfig config() const {
    ExperimentConfig c;
    c.seed = opts_.seed;
    c.window = opts_.window;
    return c;
  }

  Value call(const Expr& e) {
    const auto& a = e.args;
    const std::string& f = e.text;
    Value v;
    if (f == "syzygy") {
      PresentedModule m = mod(a[0]);
      const auto i = num(a[1]);
      v.module = i >= 0 ? minimalPresentation(syzygy(m, static_cast<int>(i)))
                        : negativeSyzygy(m, static_cast<int>(i));
    } else if (f == "dual") {
      v.module = dualModule(mod(a[0]));
    } else if (f == "hom") {
      v.module = homModule(mod(a[0]), mod(a[1]));
    } else if (f == "tensor") {
      v.module = tensorModule(mod(a[0]), mod(a[1]));
    } else if (f == "twist") {
      v.module = twist(mod(a[0]), static_cast<int>(num(a[1])));
    } else if (f == "sum") {
      v.module = directSum(mod(a[0]), mod(a[1]));
    } else if (f == "stablehom") {
      v.module = stableHom(mod(a[0]), mod(a[1]));
    } else if (f == "matlis") {
      v.module = matlisDual(mod(a[0]));
    } else if (f == "socle") {
      v.module = socle(mod(a[0]));
    } else if (f == "free") {
      std::vector<int> tw;
      for (std::size_t i = 1; i < a.size(); ++i) tw.push_back(static_cast<int>(num(a[i])));
      if (tw.empty()) tw.push_back(0);
      v.module = PresentedModule::free(ring(a[0]), tw);
    } else if (f == "residue") {
      v.module = PresentedModule::residueField(ring(a[0]));
    } else if (f == "random") {
      v.module = randomModule(config(), ring(a[0]), static_cast<std::uint64_t>(num(a[1])));
    } else if (f == "randommcm") {
      v.module = randomMCMModule(config(), ring(a[0]), static_cast<std::uint64_t>(num(a[1])));
    } else {
      typeError("unknown function '" + f + "'", e.loc);
    }
    return v;
  }

  void record(const Statement& st, nlohmann::json result, const std::string& table, double ms) {
    report_["results"].push_back({{"line", st.loc.line},
                                  {"statement", st.source},
                                  {"verb", st.verb},
                                  {"command", st.expr.text},
                                  {"result", std::move(result)},
                                  {"elapsedMs", ms}});
    say("[" + std::to_string(st.loc.line) + "] " + st.source);
    std::istringstream in(table);
    for (std::string line; std::getline(in, line);) say("    " + line);
  }

  void tally(Verdict v) {
    if (v == Verdict::Violation) ++violations_;
    if (v == Verdict::HypothesisFailure) ++hypothesisFailures_;
  }

  void command(const Statement& st) {
    const auto t0 = std::chrono::steady_clock::now();
    nlohmann::json result;
    std::string table;
    const Expr& e = st.expr;
    const auto& a = e.args;
    const std::string key = st.verb + " " + e.text;

    if (st.verb == "scan") {
      PresentedModule m = mod(a[0]), n = mod(a[1]);
      auto [lo, hi] = range(a[2]);
      if (lo < 0) typeError("negative index", a[2].loc);
      ExtTorResult r = e.text == "ext" ? ext(m, n, static_cast<int>(lo), static_cast<int>(hi))
                                       : tor(m, n, static_cast<int>(lo), static_cast<int>(hi));
      nlohmann::json dims = nlohmann::json::array();
      std::ostringstream o;
      for (auto i = lo; i <= hi; ++i) {
        ModuleSize s = r.size(static_cast<int>(i));
        dims.push_back(sizeJson(s));
        o << e.text << "_" << i << ": " << sizeText(s) << (s.isZero() ? "" : "  (nonzero)") << "\n";
      }
      result = {{"family", e.text}, {"lo", lo}, {"hi", hi}, {"dims", dims}};
      table = o.str();
    } else if (key == "check theorem21" || key == "check corollary42") {
      Theorem21Report r = e.text == "theorem21" ? theorem21Check(mod(a[0]), mod(a[1]), window(e, 2))
                                                : corollary42Check(mod(a[0]), mod(a[1]), window(e, 2));
      tally(r.verdict);
      result = r.toJson();
      table = "verdict: " + toString(r.verdict) + (r.note.empty() ? "" : " (" + r.note + ")") + "\n";
      for (const auto& p : r.patterns) table += patternLine(p) + "\n";
    } else if (key == "check symmetry") {
      SymmetryReport r = symmetryCheck(mod(a[0]), mod(a[1]), window(e, 2));
      tally(r.verdict);
      result = r.toJson();
      table = "verdict: " + toString(r.verdict) + "\n" + patternLine(r.forward) + "\n" +
              patternLine(r.backward) + "\n";
    } else if (key == "check lescot") {
      LescotReport r = lescotCheck(mod(a[0]));
      tally(r.verdict);
      result = r.toJson();
      std::ostringstream o;
      o << "verdict: " << toString(r.verdict) << "\n";
      for (std::size_t i = 0; i < r.actual.size(); ++i)
        o << "b" << i + 1 << " = " << r.actual[i] << ", formula " << r.expected[i] << "\n";
      table = o.str();
    } else if (key == "check lemma36") {
      Lemma36Report r = lemma36Check(mod(a[0]), mod(a[1]));
      tally(r.verdict);
      result = r.toJson();
      table = "verdict: " + toString(r.verdict) + "\n";
    } else if (key == "check theorem59") {
      Theorem59Report r = theorem59Check(mod(a[0]), mod(a[1]));
      tally(r.verdict);
      result = r.toJson();
      table = "verdict: " + toString(r.verdict) + "\n(1) M*(x)N MCM: " + (r.tensorMCM ? "yes" : "no") +
              "\n(2) Ext^1..d(N,M) = 0: " + (r.extVanish ? "yes" : "no") + "\n";
    } else if (key == "check prop43") {
      PresentedModule m = mod(a[0]), n = mod(a[1]);
      ExternalTensor t = externalTensor(m.ctxPtr(), n.ctxPtr());
      Prop43Report r = prop43Check(t, m, n, window(e, 2));
      tally(r.verdict);
      result = r.toJson();
      result["ring"] = t.a->toString();
      table = "verdict: " + toString(r.verdict) + "\nA = " + t.a->toString() + "\n" +
              patternLine(r.pattern) + "\n";
    } else if (key == "check changeofrings") {
      CtxPtr s = ring(a[0]);
      Value fx = eval(a[1]);
      if (!fx.text) typeError("expected the nonzerodivisor as a string", a[1].loc);
      Polynomial x = poly(s->ring(), PolyText{*fx.text, a[1].loc});
      ChangeOfRingsReport r = changeOfRingsConsistency(s, x, mod(a[2]), mod(a[3]), window(e, 4));
      tally(r.verdict);
      result = r.toJson();
      int bad = 0;
      for (const auto& c : r.checks) bad += !c.ok;
      table = "verdict: " + toString(r.verdict) + " (" + std::to_string(r.checks.size()) + " checks, " +
              std::to_string(bad) + " failed)\n";
    } else if (key == "check gorenstein") {
      bool g = gorensteinCheck(ring(a[0]));
      result = {{"gorenstein", g}};
      table = std::string("gorenstein: ") + (g ? "yes" : "no") + "\n";
    } else if (key == "check mcm") {
      bool g = isMCM(mod(a[0]));
      result = {{"mcm", g}};
      table = std::string("maximal Cohen-Macaulay: ") + (g ? "yes" : "no") + "\n";
    } else if (key == "check minmult") {
      CtxPtr r = ring(a[0]);
      try {
        requireMinimalMultiplicity(r);
        result = {{"minimalMultiplicity", true}, {"embdim", r->embeddingDimension()},
                  {"length", r->hilbert().length()}};
        table = "embdim " + std::to_string(r->embeddingDimension()) + ", length " +
                std::to_string(r->hilbert().length()) + ", socle dim 1\n";
      } catch (const HypothesisError& err) {
        ++hypothesisFailures_;
        result = {{"minimalMultiplicity", false}, {"reason", err.what()}};
        table = std::string("hypothesis failure: ") + err.what() + "\n";
      }
    } else if (key == "search ab") {
      ExperimentConfig c = config();
      if (a.size() > 1) c.trials = static_cast<int>(num(a[1]));
      SearchReport r = searchHarness(c, ring(a[0]));
      result = r.toJson();
      int tail = 0;
      for (const auto& t : r.trials) tail += t.pattern.tailVanishing;
      table = std::to_string(r.trials.size()) + " trials, " + std::to_string(tail) +
              " tail-vanishing, " + std::to_string(r.candidates.size()) + " candidates\n";
    } else if (key == "search lemma36") {
      searchLemma36(e, result, table);
    } else if (key == "print betti") {
      PresentedModule m = mod(a[0]);
      const int len = a.size() > 1 ? static_cast<int>(num(a[1])) : opts_.window;
      auto res = minimalFreeResolution(m, len);
      BettiTable b = res->betti();
      result = nlohmann::json::parse(b.toJson());
      result["finite"] = res->finite;
      table = b.toText();
    } else if (key == "print pd") {
      PresentedModule m = mod(a[0]);
      const int len = a.size() > 1 ? static_cast<int>(num(a[1])) : opts_.window;
      auto pd = minimalFreeResolution(m, len)->projectiveDimension();
      result = {{"bound", len}};
      result["pd"] = pd ? nlohmann::json(*pd) : nlohmann::json(nullptr);
      table = pd ? "pd = " + std::to_string(*pd) + "\n" : "pd > " + std::to_string(len) + "\n";
    } else if (key == "print depth") {
      int d = depth(mod(a[0]));
      result = {{"depth", d}};
      table = "depth = " + std::to_string(d) + "\n";
    } else if (key == "print hilbert") {
      PresentedModule m = mod(a[0]);
      auto [lo, hi] = range(a[1]);
      auto h = m.hilbertSeries().hilbertFunction(static_cast<int>(lo), static_cast<int>(hi));
      result = {{"lo", lo}, {"values", h}, {"size", sizeText(m.hilbertSeries().size())}};
      std::ostringstream o;
      for (std::size_t i = 0; i < h.size(); ++i) o << (i ? " " : "") << h[i];
      table = "HF[" + std::to_string(lo) + ".." + std::to_string(hi) + "] = " + o.str() + "\n";
    } else if (key == "print gaps") {
      VanishingPattern p = scanExt(mod(a[0]), mod(a[1]), window(e, 2));
      GapReport g = gapAnalysis(p);
      result = {{"pattern", p.toJson()}, {"gaps", g.toJson()["gaps"]}};
      table = patternLine(p) + "\n";
      for (const auto& gp : g.gaps)
        table += "gap at n = " + std::to_string(gp.n) + " of length " + std::to_string(gp.t) + "\n";
      if (g.gaps.empty()) table += "no gaps in window\n";
    } else if (key == "print extindex") {
      const int H = static_cast<int>(num(a[0]));
      if (a.size() % 2 == 0) typeError("extindex takes a window and module pairs", e.loc);
      std::vector<VanishingPattern> ps;
      for (std::size_t i = 1; i + 1 < a.size(); i += 2)
        ps.push_back(scanExt(mod(a[i]), mod(a[i + 1]), H, ScanMode::Decisive));
      ExtIndexEstimate est = extIndexEstimate(ps);
      result = est.toJson();
      table = est.toString() + "\n";
    } else if (key == "print module") {
      PresentedModule m = mod(a[0]);
      result = {{"ring", m.ctx().toString()}, {"module", m.toString()},
                {"minimal", minimalPresentation(m).toString()}};
      table = minimalPresentation(m).toString() + "\n";
    } else {
      typeError("unsupported command '" + key + "'", e.loc);
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    record(st, std::move(result), table, ms);
  }

  // Seeded random non-free pairs over a minimal-multiplicity context.
  void searchLemma36(const Expr& e, nlohmann::json& result, std::string& table) {
    CtxPtr ctx = ring(e.args[0]);
    const int trials = e.args.size() > 1 ? static_cast<int>(num(e.args[1])) : 50;
    requireMinimalMultiplicity(ctx);
    ExperimentConfig c = config();
    int done = 0, violations = 0, draws = 0;
    nlohmann::json rows = nlohmann::json::array();
    std::uint64_t stream = 0;
    while (done < trials && draws < 20 * trials) {
      ++draws;
      PresentedModule m = randomModule(c, ctx, stream++);
      PresentedModule n = randomModule(c, ctx, stream++);
      if (isFree(m) || isFree(n)) continue;
      Lemma36Report r = lemma36Check(m, n);
      if (r.verdict == Verdict::Violation) {
        ++violations;
        rows.push_back({{"trial", done}, {"M", replayText(m)}, {"N", replayText(n)}});
      }
      ++done;
    }
    violations_ += violations;
    result = {{"trials", done}, {"draws", draws}, {"violations", violations}, {"replay", rows}};
    table = std::to_string(done) + " trials, " + std::to_string(violations) + " violations\n";
  }

  void emit(const Statement& st) {
    std::filesystem::path p = st.path;
    if (p.is_relative() && !opts_.baseDir.empty()) p = opts_.baseDir / p;
    std::ofstream f(p);
    if (!f) throw Error("cannot write " + p.string());
    if (st.format == "json") {
      f << report_.dump(2) << "\n";
    } else {
      for (const auto& r : report_["results"]) f << r["statement"].get<std::string>() << "\n  " << r["result"].dump() << "\n";
    }
    say("wrote " + p.string());
  }

  RunOptions opts_;
  nlohmann::json report_;
  std::map<std::string, Value> values_;
  CtxPtr current_ring_;
  const Statement* current_ = nullptr;
  int violations_ = 0;
  int hypothesisFailures_ = 0;
};

}  // namespace

RunReport runScript(const Script& s, const RunOptions& opts) { return Runner(opts).run(s); }

nlohmann::json withoutTimings(nlohmann::json j) {
  if (j.is_object()) {
    j.erase("elapsedMs");
    for (auto& [k, v] : j.items()) v = withoutTimings(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = withoutTimings(v);
  }
  return j;
}

}  // namespace gorlab::script
