#include <algorithm>

#include "gorlab/errors.hpp"
#include "gorlab/module_ops.hpp"
#include "gorlab/vanishing.hpp"

namespace gorlab {

namespace {

nlohmann::json sizeJson(const std::optional<ModuleSize>& s) {
  if (!s) return nullptr;
  if (s->isZero()) return 0;
  if (s->finiteLength()) return s->multiplicity;
  return nlohmann::json{{"dim", s->dim}, {"multiplicity", s->multiplicity}};
}

using Compute = ExtTorResult (*)(const PresentedModule&, const PresentedModule&, int, int, bool);

VanishingPattern scan(const char* family, Compute compute, const PresentedModule& m,
                      const PresentedModule& n, int H, ScanMode mode) {
  requireSameContext(m.ctx(), n.ctx());
  const int d = m.ctx().dim();
  if (H < d + 3)
    throw Error("scan window H = " + std::to_string(H) + " must be at least dim + 3 = " +
                std::to_string(d + 3));
  VanishingPattern p;
  p.family = family;
  p.left = "M";
  p.right = "N";
  p.window = H;
  p.ringDim = d;
  p.sizes.assign(static_cast<std::size_t>(H), std::nullopt);
  // Known zeros: Tor against a free module, Ext out of a free module, and
  // Ext from an MCM module into a free one over a Gorenstein ring.
  const bool ext = std::string(family) == "ext";
  if (isFree(m) || (!ext && isFree(n)) ||
      (ext && isFree(n) && gorensteinCheck(m.ctxPtr()) && isMCM(m))) {
    p.sizes.assign(static_cast<std::size_t>(H), ModuleSize{});
    p.shortcut = true;
    p.derive();
    return p;
  }
  auto fill = [&](int lo, int hi) {
    ExtTorResult r = compute(m, n, lo, hi, false);
    for (int i = lo; i <= hi; ++i) p.sizes[static_cast<std::size_t>(i - 1)] = r.size(i);
  };
  if (mode == ScanMode::Full) {
    fill(1, H);
  } else {
    bool tail = true;
    for (int i = d + 1; i <= H && tail; ++i) {
      fill(i, i);
      tail = p.isZeroAt(i);
    }
    if (tail && d >= 1) fill(1, d);
  }
  p.derive();
  return p;
}

}  // namespace

std::optional<std::int64_t> VanishingPattern::lengthAt(int i) const {
  const auto& s = sizes.at(static_cast<std::size_t>(i - 1));
  if (!s || !s->finiteLength()) return std::nullopt;
  return s->isZero() ? 0 : s->multiplicity;
}

void VanishingPattern::derive() {
  tailVanishing = true;
  for (int i = ringDim + 1; i <= window; ++i)
    if (!known(i) || !isZeroAt(i)) tailVanishing = false;
  lastNonzero = 0;
  for (int i = 1; i <= window; ++i)
    if (known(i) && !isZeroAt(i)) lastNonzero = i;
  trailingZeros = 0;
  for (int i = window; i >= 1 && known(i) && isZeroAt(i); --i) ++trailingZeros;
}

nlohmann::json VanishingPattern::toJson() const {
  nlohmann::json dims = nlohmann::json::array();
  for (const auto& s : sizes) dims.push_back(sizeJson(s));
  return {{"family", family},       {"pair", {left, right}},
          {"window", {1, window}},  {"ringDim", ringDim},
          {"dims", dims},           {"tailVanishing", tailVanishing},
          {"lastNonzero", lastNonzero}, {"trailingZeros", trailingZeros}, {"shortcut", shortcut}};
}

VanishingPattern scanExt(const PresentedModule& m, const PresentedModule& n, int H, ScanMode mode) {
  return scan("ext", &ext, m, n, H, mode);
}

VanishingPattern scanTor(const PresentedModule& m, const PresentedModule& n, int H, ScanMode mode) {
  return scan("tor", &tor, m, n, H, mode);
}

GapReport gapAnalysis(const VanishingPattern& p) {
  for (int i = 1; i <= p.window; ++i)
    if (!p.known(i)) throw Error("gap analysis needs a fully scanned pattern");
  GapReport g;
  int prev = 0;
  for (int i = 1; i <= p.window; ++i) {
    if (p.isZeroAt(i)) continue;
    if (prev > 0 && i - prev > 1) g.gaps.push_back(Gap{prev, i - prev - 1});
    prev = i;
  }
  return g;
}

nlohmann::json GapReport::toJson() const {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& g : gaps) a.push_back({{"n", g.n}, {"t", g.t}});
  return {{"gaps", a}};
}

ExtIndexEstimate extIndexEstimate(const std::vector<VanishingPattern>& patterns) {
  ExtIndexEstimate e;
  e.pairs = static_cast<int>(patterns.size());
  for (const auto& p : patterns) {
    e.window = std::max(e.window, p.window);
    if (!p.settled()) continue;
    ++e.settledPairs;
    e.value = std::max(e.value.value_or(0), p.lastNonzero);
  }
  return e;
}

std::string ExtIndexEstimate::toString() const {
  if (!value) return "no settled pair observed";
  return "estimate " + std::to_string(*value) + " (window " + std::to_string(window) + ", " +
         std::to_string(settledPairs) + " of " + std::to_string(pairs) + " pairs)";
}

nlohmann::json ExtIndexEstimate::toJson() const {
  nlohmann::json j{{"kind", "estimate"}, {"window", window}, {"pairs", pairs},
                   {"settledPairs", settledPairs}, {"text", toString()}};
  j["value"] = value ? nlohmann::json(*value) : nlohmann::json(nullptr);
  return j;
}

std::string toString(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::Violation: return "VIOLATION";
    case Verdict::HypothesisFailure: return "hypothesis failure";
    case Verdict::NotEstablished: return "hypothesis not established";
  }
  return "?";
}

std::string replayText(const PresentedModule& m) {
  return m.ctx().toString() + " :: " + m.toString();
}

}  // namespace gorlab
