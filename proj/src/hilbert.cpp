#include "gorlab/hilbert.hpp"

#include <algorithm>

#include "gorlab/errors.hpp"

namespace gorlab {

LaurentPoly LaurentPoly::monomial(int e, std::int64_t c) {
  LaurentPoly p;
  p.addTerm(e, c);
  return p;
}

void LaurentPoly::addTerm(int e, std::int64_t c) {
  if (c == 0) return;
  auto [it, fresh] = c_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

std::int64_t LaurentPoly::at(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? 0 : it->second;
}

std::int64_t LaurentPoly::valueAtOne() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : c_) s += c;
  return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) addTerm(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) addTerm(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) r.addTerm(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly r;
  for (const auto& [k, c] : c_) r.c_.emplace(k + e, c);
  return r;
}

LaurentPoly LaurentPoly::divideOneMinusT() const {
  // P = (1 - t) Q  =>  q_e = sum_{k <= e} p_k.
  LaurentPoly q;
  if (c_.empty()) return q;
  std::int64_t running = 0;
  int lo = c_.begin()->first, hi = c_.rbegin()->first;
  for (int e = lo; e < hi; ++e) {
    running += at(e);
    q.addTerm(e, running);
  }
  if (running + at(hi) != 0) throw Error("Laurent polynomial not divisible by 1 - t");
  return q;
}

std::string LaurentPoly::toString() const {
  if (c_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : c_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag) + "*";
    s += "t";
    if (e != 1) s += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return s;
}

ModuleSize ModuleSize::operator+(const ModuleSize& o) const {
  if (dim != o.dim) return dim > o.dim ? *this : o;
  return ModuleSize{dim, multiplicity + o.multiplicity};
}

std::string ModuleSize::toString() const {
  if (dim < 0) return "0";
  if (dim == 0) return "length " + std::to_string(multiplicity);
  return "dim " + std::to_string(dim) + ", multiplicity " + std::to_string(multiplicity);
}

HilbertSeries::HilbertSeries(LaurentPoly numerator, std::vector<int> weights)
    : num_(std::move(numerator)), weights_(std::move(weights)) {
  if (num_.isZero()) return;
  int order = 0;
  LaurentPoly q = num_;
  while (q.valueAtOne() == 0) {
    q = q.divideOneMinusT();
    ++order;
  }
  size_.dim = static_cast<int>(weights_.size()) - order;
  size_.multiplicity = q.valueAtOne();
  reduced_ = std::move(q);
  if (size_.dim < 0) throw Error("Hilbert numerator vanishes to excess order at t = 1");
}

std::vector<std::int64_t> HilbertSeries::hilbertFunction(int lo, int hi) const {
  std::vector<std::int64_t> out;
  if (hi < lo || num_.isZero()) return std::vector<std::int64_t>(hi >= lo ? hi - lo + 1 : 0, 0);
  int base = std::min(lo, num_.coefficients().begin()->first);
  // Dense series from `base` to `hi`, multiplied by each 1/(1 - t^w).
  std::vector<std::int64_t> s(static_cast<std::size_t>(hi - base + 1), 0);
  for (const auto& [e, c] : num_.coefficients())
    if (e <= hi) s[static_cast<std::size_t>(e - base)] += c;
  for (int w : weights_)
    for (std::size_t i = static_cast<std::size_t>(w); i < s.size(); ++i) s[i] += s[i - w];
  for (int d = lo; d <= hi; ++d) out.push_back(s[static_cast<std::size_t>(d - base)]);
  return out;
}

std::int64_t HilbertSeries::length() const {
  if (size_.dim > 0) throw HypothesisError("module is not of finite length");
  if (size_.dim < 0) return 0;
  std::int64_t s = 0;
  for (auto v : hilbertFunction(lowestDegree(), highestDegree())) s += v;
  return s;
}

int HilbertSeries::lowestDegree() const { return num_.coefficients().begin()->first; }

int HilbertSeries::highestDegree() const {
  int top = num_.coefficients().rbegin()->first;
  if (size_.dim == 0) {
    int wsum = 0;
    for (int w : weights_) wsum += w;
    // HS is a polynomial; its degree is deg N - sum of weights.
    return top - wsum;
  }
  return top;
}

namespace {

std::vector<int> exps(const Monomial& m) {
  std::vector<int> e(m.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = m.exponent(i);
  return e;
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens.swap(out);
}

LaurentPoly numeratorRec(std::vector<Monomial> gens, std::span<const int> weights) {
  minimalize(gens);
  LaurentPoly one = LaurentPoly::monomial(0);
  if (gens.empty()) return one;

  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) {
        coprime = false;
        break;
      }
  if (coprime) {
    LaurentPoly r = one;
    for (const auto& g : gens) {
      LaurentPoly f = one;
      f -= LaurentPoly::monomial(g.degree());
      r = r * f;
    }
    return r;
  }

  // Pivot on the variable occurring in most generators, at the median of its
  // positive exponents.
  const std::size_t n = gens.front().nvars();
  std::size_t best = 0, bestCount = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t cnt = 0;
    for (const auto& g : gens) cnt += g.exponent(v) > 0;
    if (cnt > bestCount) {
      bestCount = cnt;
      best = v;
    }
  }
  std::vector<int> es;
  for (const auto& g : gens)
    if (g.exponent(best) > 0) es.push_back(g.exponent(best));
  std::sort(es.begin(), es.end());
  int e = es[(es.size() - 1) / 2];

  std::vector<int> pe(n, 0);
  pe[best] = e;
  Monomial p(pe, weights);

  std::vector<Monomial> sum = gens;
  sum.push_back(p);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    auto ge = exps(g);
    ge[best] = std::max(0, ge[best] - e);
    colon.emplace_back(ge, weights);
  }
  LaurentPoly r = numeratorRec(std::move(sum), weights);
  r += numeratorRec(std::move(colon), weights).shifted(p.degree());
  return r;
}

}  // namespace

LaurentPoly monomialIdealNumerator(std::vector<Monomial> gens, std::span<const int> weights) {
  return numeratorRec(std::move(gens), weights);
}

HilbertSeries monomialModuleSeries(const std::vector<std::vector<Monomial>>& perComponent,
                                   std::span<const int> twists, std::span<const int> weights) {
  if (perComponent.size() != twists.size()) throw MismatchError("twist count differs from rank");
  LaurentPoly num;
  for (std::size_t c = 0; c < perComponent.size(); ++c)
    num += monomialIdealNumerator(perComponent[c], weights).shifted(twists[c]);
  return HilbertSeries(std::move(num), std::vector<int>(weights.begin(), weights.end()));
}

}  // namespace gorlab
