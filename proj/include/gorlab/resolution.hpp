#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gorlab/module.hpp"

namespace gorlab {

// Homologically indexed complex of free modules: d(i) maps C_i -> C_{i-1}
// for lo < i <= hi.
class FreeComplex {
 public:
  FreeComplex() = default;
  FreeComplex(int lo, std::vector<std::vector<int>> twists, std::vector<Matrix> differentials);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(twists_.size()) - 1; }
  const std::vector<int>& twists(int i) const { return twists_.at(static_cast<std::size_t>(i - lo_)); }
  std::size_t rank(int i) const { return twists(i).size(); }
  // lo < i <= hi.
  const Matrix& d(int i) const { return d_.at(static_cast<std::size_t>(i - lo_ - 1)); }

  bool composesToZero(const QuotientRingCtx& ctx) const;
  bool isMinimal(const QuotientRingCtx& ctx) const;
  // Hom(-, R): (C*)_j = (C_{-j-1})^*, so that C(M)* has the shape of C(M*).
  FreeComplex dual() const;

 private:
  int lo_ = 0;
  std::vector<std::vector<int>> twists_;
  std::vector<Matrix> d_;
};

class BettiTable {
 public:
  // b[i][j]: generators of internal degree j in homological position i.
  std::map<int, std::map<int, std::int64_t>> entries;

  static BettiTable of(const FreeComplex& c);
  std::int64_t total(int i) const;
  std::vector<std::int64_t> totals(int lo, int hi) const;
  // Rows by j - i, columns by i.
  std::string toText() const;
  std::string toJson() const;
  bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

// Minimal free resolution F_n -> ... -> F_0 of M, complex indices 0..len.
// `finite` when a zero kernel was reached at len <= requested length.
struct Resolution {
  FreeComplex complex;
  PresentedModule module;  // minimal presentation of M
  Matrix fromInput;        // F_0 generators in terms of the input generators
  bool finite = false;

  int length() const { return complex.hi(); }
  BettiTable betti() const { return BettiTable::of(complex); }
  std::optional<int> projectiveDimension() const {
    if (!finite) return std::nullopt;
    return complex.hi();
  }
};

// Cached per (context, presentation); extending a cached shorter resolution.
std::shared_ptr<const Resolution> minimalFreeResolution(const PresentedModule& m, int length);
// Image of the i-th differential, i >= 0 (i = 0: M itself, minimized).
PresentedModule syzygy(const PresentedModule& m, int i);

// Window [-t, n] of the complete resolution of an MCM module over a
// Gorenstein context, C_i = F_i for i >= 0, C_{-j-1} = G_j^* for a minimal
// resolution G of M^*.
struct CompleteResolution {
  FreeComplex complex;
  int spliceIndex = 0;  // d(0): F_0 -> G_0^*
};
// Throws HypothesisError unless M is MCM and the context is Gorenstein.
CompleteResolution completeResolution(const PresentedModule& m, int t, int n);
// M_i for i <= -1: image of g_{-i}^*.
PresentedModule negativeSyzygy(const PresentedModule& m, int i);

struct ExtTorResult {
  enum class Family { Ext, Tor } family = Family::Ext;
  int lo = 0;
  int hi = -1;
  std::vector<HilbertSeries> series;            // index lo + k
  std::vector<std::optional<PresentedModule>> modules;  // when requested

  ModuleSize size(int i) const { return series.at(static_cast<std::size_t>(i - lo)).size(); }
  bool isZero(int i) const { return size(i).isZero(); }
  // Length when finite, nullopt otherwise.
  std::optional<std::int64_t> length(int i) const;
};

ExtTorResult ext(const PresentedModule& m, const PresentedModule& n, int lo, int hi,
                 bool withModules = false);
ExtTorResult tor(const PresentedModule& m, const PresentedModule& n, int lo, int hi,
                 bool withModules = false);
// Same values computed through the complete resolution: Ext^i(M,N) as
// Tor_{t-i-1}((M^*)_{-t}, N) and Tor_i(M,N) as Ext^{t-i-1}((M^*)_{-t}, N),
// valid for 1 <= i <= t - 2. M must be MCM over a Gorenstein context.
ExtTorResult extViaComplete(const PresentedModule& m, const PresentedModule& n, int lo, int hi,
                            int t);
ExtTorResult torViaComplete(const PresentedModule& m, const PresentedModule& n, int lo, int hi,
                            int t);

// Least i with Ext^i(k, M) != 0. Throws for the zero module.
int depth(const PresentedModule& m);
// The zero module counts as MCM.
bool isMCM(const PresentedModule& m);
bool gorensteinCheck(const CtxPtr& ctx);

}  // namespace gorlab
