#include "gorlab/groebner.hpp"

#include <algorithm>
#include <limits>

#include "gorlab/errors.hpp"
#include "gorlab/limits.hpp"

namespace gorlab {

ModuleGroebner::ModuleGroebner(ModuleOrder order, std::span<const Polynomial> implicitIdeal,
                               GroebnerOptions options)
    : order_(std::move(order)), options_(options) {
  const PolyRing& R = order_.ring();
  for (const auto& f : implicitIdeal) {
    if (f.isZero()) continue;
    if (f.leading().mono.nvars() != R.nvars())
      throw MismatchError("ideal element lives in a different ring");
    ideal_.push_back(R.monic(f));
  }
  polynomialMode_ = order_.rank() == 1;
  byComp_.resize(order_.rank());
}

ModVec ModuleGroebner::canonical(ModVec v) const {
  const FieldSpec& F = ring().field();
  std::sort(v.begin(), v.end(),
            [this](const ModTerm& a, const ModTerm& b) { return order_.compare(a, b) > 0; });
  ModVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (t.comp >= order_.rank()) throw MismatchError("component index out of range");
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coef = F.add(out.back().coef, t.coef);
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return out;
}

void ModuleGroebner::addInput(ModVec v) {
  if (ran_) throw Error("inputs must be added before run()");
  v = canonical(std::move(v));
  std::size_t index = inputs_.size();
  if (v.empty()) {
    inputs_.push_back({std::move(v), 0, index});
    return;
  }
  int d = vecDegree(v);
  for (const auto& t : v)
    if (order_.degreeOf(t) != d) throw InhomogeneousError("module element is not homogeneous");
  inputs_.push_back({std::move(v), d, index});
}

std::optional<std::int32_t> ModuleGroebner::findReducer(const ModTerm& t) const {
  for (std::size_t k = 0; k < ideal_.size(); ++k)
    if (ideal_[k].leading().mono.divides(t.mono)) return -static_cast<std::int32_t>(k) - 1;
  for (std::uint32_t i : byComp_[t.comp])
    if (leads_[i].mono.divides(t.mono)) return static_cast<std::int32_t>(i);
  return std::nullopt;
}

// Replaces cur[pos..] by cur[pos+1..] - c*m*tail(reducer). The term at pos is
// the one being cancelled.
void ModuleGroebner::subtractMultiple(ModVec& cur, std::size_t pos, Coeff c, const Monomial& m,
                                      std::int32_t reducer, std::uint32_t comp,
                                      ModVec& scratch) const {
  const FieldSpec& F = ring().field();
  Coeff nc = F.neg(c);
  scratch.clear();
  scratch.insert(scratch.end(), cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(pos));

  std::size_t i = pos + 1;
  auto merge = [&](const ModTerm& bt) {
    while (i < cur.size() && order_.compare(cur[i], bt) > 0) scratch.push_back(cur[i++]);
    if (i < cur.size() && cur[i].comp == bt.comp && cur[i].mono == bt.mono) {
      Coeff s = F.add(cur[i].coef, bt.coef);
      if (s != 0) scratch.push_back(ModTerm{bt.mono, bt.comp, s});
      ++i;
    } else {
      scratch.push_back(bt);
    }
  };

  if (reducer >= 0) {
    const ModVec& g = basis_[reducer];
    for (std::size_t j = 1; j < g.size(); ++j)
      merge(ModTerm{g[j].mono * m, g[j].comp, F.mul(nc, g[j].coef)});
  } else {
    const auto& terms = ideal_[-reducer - 1].terms();
    for (std::size_t j = 1; j < terms.size(); ++j)
      merge(ModTerm{terms[j].mono * m, comp, F.mul(nc, terms[j].coef)});
  }
  scratch.insert(scratch.end(), cur.begin() + static_cast<std::ptrdiff_t>(i), cur.end());
  cur.swap(scratch);
}

ModVec ModuleGroebner::reduce(ModVec v, bool full) const {
  ModVec scratch;
  std::size_t pos = 0;
  while (pos < v.size()) {
    const ModTerm t = v[pos];
    auto r = findReducer(t);
    if (!r) {
      if (!full) break;
      ++pos;
      continue;
    }
    Monomial m = t.mono.quotient(leadMono(*r));
    subtractMultiple(v, pos, t.coef, m, *r, t.comp, scratch);
  }
  return v;
}

void ModuleGroebner::makeMonic(ModVec& v) const {
  if (v.empty() || v.front().coef == 1) return;
  const FieldSpec& F = ring().field();
  Coeff inv = F.inv(v.front().coef);
  for (auto& t : v) t.coef = F.mul(t.coef, inv);
}

ModVec ModuleGroebner::sPolynomial(const Pair& p) const {
  const ModVec& gi = basis_[p.i];
  Monomial mi = p.lcm.quotient(leads_[p.i].mono);
  ModVec v;
  v.reserve(gi.size());
  for (const auto& t : gi) v.push_back(ModTerm{t.mono * mi, t.comp, t.coef});
  ModVec scratch;
  subtractMultiple(v, 0, 1, p.lcm.quotient(leadMono(p.j)), p.j, p.comp, scratch);
  return v;
}

void ModuleGroebner::insert(ModVec v) {
  makeMonic(v);
  if (basis_.size() >= options_.maxBasisSize)
    throw ResourceCapExceeded("Groebner basis exceeds " + std::to_string(options_.maxBasisSize) +
                              " elements");
  auto t = static_cast<std::uint32_t>(basis_.size());
  leads_.push_back(v.front());
  basis_.push_back(std::move(v));
  updatePairs(t);
  byComp_[leads_[t].comp].push_back(t);
}

// Gebauer-Moeller update for the new element t.
void ModuleGroebner::updatePairs(std::uint32_t t) {
  const PolyRing& R = ring();
  const ModTerm& lt = leads_[t];
  const std::uint32_t c = lt.comp;

  // Old pairs whose lcm is strictly divisible by lt in both directions.
  std::erase_if(pairs_, [&](const Pair& p) {
    if (p.comp != c || !lt.mono.divides(p.lcm)) return false;
    Monomial a = R.lcm(leadMono(static_cast<std::int32_t>(p.i)), lt.mono);
    Monomial b = R.lcm(leadMono(p.j), lt.mono);
    return a != p.lcm && b != p.lcm;
  });

  std::vector<Pair> fresh;
  auto add = [&](std::int32_t other) {
    const Monomial& u = leadMono(other);
    Monomial L = R.lcm(u, lt.mono);
    bool coprime = (other < 0 || polynomialMode_) && u.coprime(lt.mono);
    fresh.push_back(Pair{t, other, c, order_.degreeOf(ModTerm{L, c, 1}), L, coprime});
  };
  for (std::size_t k = 0; k < ideal_.size(); ++k) add(-static_cast<std::int32_t>(k) - 1);
  for (std::uint32_t j : byComp_[c]) add(static_cast<std::int32_t>(j));

  // Drop pairs whose lcm is a proper multiple of another new lcm.
  std::vector<char> dead(fresh.size(), 0);
  for (std::size_t a = 0; a < fresh.size(); ++a)
    for (std::size_t b = 0; b < fresh.size(); ++b)
      if (a != b && fresh[b].lcm.divides(fresh[a].lcm) && fresh[b].lcm != fresh[a].lcm) {
        dead[a] = 1;
        break;
      }
  // Among equal lcms keep one, none if any of them is coprime.
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (dead[a]) continue;
    bool anyCoprime = fresh[a].coprime;
    for (std::size_t b = a + 1; b < fresh.size(); ++b)
      if (!dead[b] && fresh[b].lcm == fresh[a].lcm) {
        anyCoprime = anyCoprime || fresh[b].coprime;
        dead[b] = 1;
      }
    if (anyCoprime) dead[a] = 1;
  }
  for (std::size_t a = 0; a < fresh.size(); ++a)
    if (!dead[a]) pairs_.push_back(fresh[a]);
}

void ModuleGroebner::run() {
  if (ran_) return;
  ran_ = true;
  std::stable_sort(inputs_.begin(), inputs_.end(),
                   [](const PendingInput& a, const PendingInput& b) { return a.degree < b.degree; });
  std::size_t nextInput = 0;
  while (nextInput < inputs_.size() && inputs_[nextInput].vec.empty())
    pruned_.push_back(inputs_[nextInput++].index);

  while (!pairs_.empty() || nextInput < inputs_.size()) {
    int d = std::numeric_limits<int>::max();
    for (const auto& p : pairs_) d = std::min(d, p.degree);
    if (nextInput < inputs_.size()) d = std::min(d, inputs_[nextInput].degree);
    if (d > options_.degreeCap) throw DegreeCapExceeded(d, options_.degreeCap);
    checkDeadline();

    std::vector<Pair> batch;
    auto split = std::partition(pairs_.begin(), pairs_.end(),
                                [d](const Pair& p) { return p.degree != d; });
    batch.assign(split, pairs_.end());
    pairs_.erase(split, pairs_.end());
    std::sort(batch.begin(), batch.end(), [this](const Pair& a, const Pair& b) {
      return order_.compare(ModTerm{a.lcm, a.comp, 1}, ModTerm{b.lcm, b.comp, 1}) < 0;
    });
    for (const auto& p : batch) {
      ModVec h = reduce(sPolynomial(p), false);
      ++pairsReduced_;
      if (!h.empty()) insert(std::move(h));
    }

    for (; nextInput < inputs_.size() && inputs_[nextInput].degree == d; ++nextInput) {
      ModVec h = reduce(inputs_[nextInput].vec, false);
      bool survives = !h.empty() && order_.block(h.front().comp) == 0;
      (survives ? kept_ : pruned_).push_back(inputs_[nextInput].index);
      if (!h.empty()) insert(std::move(h));
    }
  }
  std::sort(kept_.begin(), kept_.end());
  std::sort(pruned_.begin(), pruned_.end());
  inputs_.clear();
  finalizeBasis();
}

void ModuleGroebner::finalizeBasis() {
  if (!options_.reduceBasis) return;
  const std::size_t n = basis_.size();
  std::vector<char> drop(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::uint32_t j : byComp_[leads_[i].comp])
      if (j != i && !drop[j] && leads_[j].mono.divides(leads_[i].mono)) {
        drop[i] = 1;
        break;
      }
  std::vector<ModVec> kept;
  std::vector<ModTerm> keptLeads;
  for (std::size_t i = 0; i < n; ++i)
    if (!drop[i]) {
      kept.push_back(std::move(basis_[i]));
      keptLeads.push_back(leads_[i]);
    }
  basis_ = std::move(kept);
  leads_ = std::move(keptLeads);
  for (auto& v : byComp_) v.clear();
  for (std::uint32_t i = 0; i < basis_.size(); ++i) byComp_[leads_[i].comp].push_back(i);
  pairs_.clear();

  ModVec scratch;
  for (auto& g : basis_) {
    // Leading term is irreducible by the others; reduce the tail only.
    std::size_t pos = 1;
    while (pos < g.size()) {
      const ModTerm t = g[pos];
      auto r = findReducer(t);
      if (!r) {
        ++pos;
        continue;
      }
      subtractMultiple(g, pos, t.coef, t.mono.quotient(leadMono(*r)), *r, t.comp, scratch);
    }
  }
}

std::vector<std::vector<Monomial>> ModuleGroebner::leadingMonomials(std::size_t lo,
                                                                    std::size_t hi) const {
  std::vector<std::vector<Monomial>> out(hi - lo);
  for (std::size_t c = lo; c < hi; ++c) {
    for (const auto& f : ideal_) out[c - lo].push_back(f.leading().mono);
    for (std::uint32_t i : byComp_[c]) out[c - lo].push_back(leads_[i].mono);
  }
  return out;
}

}  // namespace gorlab
