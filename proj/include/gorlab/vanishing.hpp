#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gorlab/module.hpp"
#include "gorlab/resolution.hpp"

namespace gorlab {

// "Vanishing for i >> 0" is read as vanishing on (d, H] for d = dim R.
//
// A full scan computes every index in [1, H]. A decisive scan looks at the
// tail (d, H] from d + 1 upward and stops at the first nonzero there; the
// indices 1..d are only filled in when the tail vanishes. lastNonzero and
// trailingZeros are exact for full scans and for vanishing tails.
//
// A pattern is settled when its last kSettleRun indices vanish: the window
// shows eventual vanishing, possibly later than d.
enum class ScanMode { Full, Decisive };

inline constexpr int kSettleRun = 3;

struct VanishingPattern {
  std::string family;  // "ext" or "tor"
  std::string left, right;
  int window = 0;   // H
  int ringDim = 0;  // d
  // sizes[i - 1] for i in [1, H]; nullopt where a decisive scan skipped it.
  std::vector<std::optional<ModuleSize>> sizes;
  bool tailVanishing = false;
  // Largest i in [1, H] with a nonzero module, 0 if none; meaningful only
  // when every index up to H was computed or the tail vanishes.
  int lastNonzero = 0;
  int trailingZeros = 0;  // zeros ending at H
  // Filled with zeros without computing, because an argument is free.
  bool shortcut = false;

  bool settled() const { return trailingZeros >= kSettleRun; }
  bool known(int i) const { return sizes.at(static_cast<std::size_t>(i - 1)).has_value(); }
  bool isZeroAt(int i) const { return sizes.at(static_cast<std::size_t>(i - 1))->isZero(); }
  // Length at i, or nullopt when unknown or of positive dimension.
  std::optional<std::int64_t> lengthAt(int i) const;
  // Recomputes tailVanishing, lastNonzero and trailingZeros from sizes.
  void derive();
  nlohmann::json toJson() const;
};

// Throws Error unless H >= dim + 3.
VanishingPattern scanExt(const PresentedModule& m, const PresentedModule& n, int H,
                         ScanMode mode = ScanMode::Full);
VanishingPattern scanTor(const PresentedModule& m, const PresentedModule& n, int H,
                         ScanMode mode = ScanMode::Full);

struct Gap {
  int n = 0;
  int t = 0;
  bool operator==(const Gap&) const = default;
};
struct GapReport {
  std::vector<Gap> gaps;
  nlohmann::json toJson() const;
};
// Maximal in-window gaps: nonzero at n and n + t + 1, zero strictly between.
// Requires a fully known pattern.
GapReport gapAnalysis(const VanishingPattern& p);

struct ExtIndexEstimate {
  std::optional<int> value;
  int window = 0;
  int pairs = 0;
  int settledPairs = 0;
  std::string toString() const;
  nlohmann::json toJson() const;
};
ExtIndexEstimate extIndexEstimate(const std::vector<VanishingPattern>& patterns);

enum class Verdict { Consistent, Violation, HypothesisFailure, NotEstablished };
std::string toString(Verdict v);

struct Theorem21Report {
  Verdict verdict = Verdict::Consistent;
  std::string note;
  std::vector<VanishingPattern> patterns;  // Tor(M,N), Ext(M,N*), Ext(N,M*)
  int window = 0;
  nlohmann::json toJson() const;
};
// With skipMcmCheck the hypothesis is not enforced, which reproduces the
// failure of the equivalence for non-MCM N.
Theorem21Report theorem21Check(const PresentedModule& m, const PresentedModule& n, int H,
                               bool skipMcmCheck = false);

struct SymmetryReport {
  Verdict verdict = Verdict::Consistent;
  VanishingPattern forward;   // Ext(M, N)
  VanishingPattern backward;  // Ext(N, M)
  int window = 0;
  bool rechecked = false;
  std::string replay;  // presentations, filled for a violation
  nlohmann::json toJson() const;
};
// A violation at H is recomputed at H + 4 before it is reported.
SymmetryReport symmetryCheck(const PresentedModule& m, const PresentedModule& n, int H);

// Tor(M,N), Ext(M*,N) and Ext(N*,M) tail-vanishing agree.
Theorem21Report corollary42Check(const PresentedModule& m, const PresentedModule& n, int H);

// Artinian Gorenstein with length = embdim + 2 and embdim > 2.
void requireMinimalMultiplicity(const CtxPtr& ctx);

struct LescotReport {
  Verdict verdict = Verdict::Consistent;
  int n = 0;
  std::int64_t s = 0;
  std::int64_t b0 = 0;
  std::vector<std::int64_t> expected;  // b1, b2, b3
  std::vector<std::int64_t> actual;
  std::vector<bool> holds;
  nlohmann::json toJson() const;
};
// Betti formulas for syzygy(M, 1). A failing formula is NotEstablished,
// never a violation.
LescotReport lescotCheck(const PresentedModule& m);

struct Lemma36Report {
  Verdict verdict = Verdict::Consistent;
  bool mFree = false;
  bool nFree = false;
  std::vector<std::optional<ModuleSize>> tor;  // Tor_3, Tor_4, Tor_5
  nlohmann::json toJson() const;
};
Lemma36Report lemma36Check(const PresentedModule& m, const PresentedModule& n);

struct Theorem59Report {
  Verdict verdict = Verdict::Consistent;
  bool tensorMCM = false;  // (1)
  bool extVanish = false;  // (2)
  bool extFiniteLength = false;
  std::optional<bool> homMCM;
  std::optional<bool> dualSeriesMatch;
  std::string note;
  nlohmann::json toJson() const;
};
Theorem59Report theorem59Check(const PresentedModule& m, const PresentedModule& n);

struct CheckLine {
  std::string name;
  int index = 0;
  bool ok = true;
  std::string detail;
};
struct ChangeOfRingsReport {
  Verdict verdict = Verdict::Consistent;
  int window = 0;
  int shift = 0;  // degree of x
  std::vector<CheckLine> checks;
  nlohmann::json toJson() const;
};
// S a context, x a homogeneous nonzerodivisor on S, M and N modules over
// R = S/(x). Checks dimension conditions implied by the change of rings
// sequences, the periodicity of Ext_R where Ext_S vanishes, and the Rees
// isomorphism Ext_R(M, N) = Ext_S(M', N) for the lift M' of M when x is
// regular on M'.
ChangeOfRingsReport changeOfRingsConsistency(const CtxPtr& s, const Polynomial& x,
                                             const PresentedModule& m, const PresentedModule& n,
                                             int H);
// S/(x) as a context over the same polynomial ring.
CtxPtr quotientBy(const CtxPtr& s, const Polynomial& x);

// Graded tensor product over k of two contexts, variables renamed with a
// "_2" suffix where they clash.
struct ExternalTensor {
  CtxPtr a;
  CtxPtr left;
  CtxPtr right;
  // M_R (x) S and R (x) N_S as modules over A.
  PresentedModule fromLeft(const PresentedModule& m) const;
  PresentedModule fromRight(const PresentedModule& n) const;
  Polynomial mapLeft(const Polynomial& f) const;
  Polynomial mapRight(const Polynomial& f) const;
};
ExternalTensor externalTensor(const CtxPtr& r, const CtxPtr& s);

struct Prop43Report {
  Verdict verdict = Verdict::Consistent;
  bool gorenstein = false;
  VanishingPattern pattern;
  nlohmann::json toJson() const;
};
Prop43Report prop43Check(const ExternalTensor& t, const PresentedModule& mR,
                         const PresentedModule& nS, int H);

struct ExperimentConfig {
  int window = 10;
  std::uint64_t seed = 1;
  int maxGenerators = 3;
  int maxRelations = 3;
  int maxRelationDegree = 3;
  int trials = 50;
};

// Seeded by (cfg.seed, stream). Generator twists uniform in {0, 1}, the
// number of relations uniform in [0, maxRelations], relation degree
// uniform in [1, maxRelationDegree] above the top twist. Each entry is zero
// with probability 1/2 or when its degree would exceed maxRelationDegree,
// otherwise a sum of one or two standard monomials of the right degree with
// uniform nonzero coefficients.
PresentedModule randomModule(const ExperimentConfig& cfg, const CtxPtr& ctx,
                             std::uint64_t stream = 0);
// randomModule, replaced by its d-th syzygy for d = dim R > 0.
PresentedModule randomMCMModule(const ExperimentConfig& cfg, const CtxPtr& ctx,
                                std::uint64_t stream = 0);

struct SearchTrial {
  int trial = 0;
  bool mFree = false;
  bool nFree = false;
  VanishingPattern pattern;
};
struct SearchReport {
  ExperimentConfig config;
  int ringDim = 0;
  std::vector<SearchTrial> trials;
  std::vector<std::string> candidates;  // replay data for settled patterns with lastNonzero > d
  nlohmann::json toJson() const;
};
SearchReport searchHarness(const ExperimentConfig& cfg, const CtxPtr& ctx);

// Replayable text form of a module.
std::string replayText(const PresentedModule& m);

}  // namespace gorlab
