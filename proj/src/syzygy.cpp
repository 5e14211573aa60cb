#include <algorithm>

#include "gorlab/errors.hpp"
#include "gorlab/groebner.hpp"

namespace gorlab {

std::vector<Polynomial> groebnerBasis(const PolyRing& ring, std::span<const Polynomial> gens,
                                      GroebnerOptions options) {
  options.reduceBasis = true;
  ModuleGroebner gb(ModuleOrder(ring, {0}), {}, options);
  for (const auto& f : gens) {
    ModVec v;
    for (const auto& t : f.terms()) v.push_back(ModTerm{t.mono, 0, t.coef});
    gb.addInput(std::move(v));
  }
  gb.run();
  std::vector<Polynomial> out;
  for (const auto& v : gb.basis()) {
    std::vector<Term> terms;
    terms.reserve(v.size());
    for (const auto& t : v) terms.push_back(Term{t.mono, t.coef});
    out.emplace_back(std::move(terms));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring.compare(a.leading().mono, b.leading().mono) < 0;
  });
  return out;
}

Polynomial polyNormalForm(const PolyRing& ring, const Polynomial& f,
                          std::span<const Polynomial> divisors) {
  const FieldSpec& F = ring.field();
  std::vector<Term> rem;
  Polynomial cur = f;
  while (!cur.isZero()) {
    const Term lead = cur.leading();
    const Polynomial* hit = nullptr;
    for (const auto& d : divisors)
      if (!d.isZero() && d.leading().mono.divides(lead.mono)) {
        hit = &d;
        break;
      }
    if (hit) {
      Coeff c = F.neg(F.div(lead.coef, hit->leading().coef));
      cur = ring.addMulTerm(cur, c, lead.mono.quotient(hit->leading().mono), *hit);
    } else {
      rem.push_back(lead);
      cur.mutableTerms().erase(cur.mutableTerms().begin());
    }
  }
  return Polynomial(std::move(rem));
}

namespace {

// a - c*m*b in `order`; both sorted.
ModVec subMul(const ModuleOrder& order, const ModVec& a, Coeff c, const Monomial& m,
              const ModVec& b) {
  const FieldSpec& F = order.ring().field();
  Coeff nc = F.neg(c);
  ModVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  for (const auto& bt0 : b) {
    ModTerm bt{bt0.mono * m, bt0.comp, F.mul(nc, bt0.coef)};
    while (i < a.size() && order.compare(a[i], bt) > 0) out.push_back(a[i++]);
    if (i < a.size() && a[i].comp == bt.comp && a[i].mono == bt.mono) {
      Coeff s = F.add(a[i].coef, bt.coef);
      if (s != 0) out.push_back(ModTerm{bt.mono, bt.comp, s});
      ++i;
    } else {
      out.push_back(bt);
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  return out;
}

}  // namespace

DivisionResult divide(const ModuleOrder& order, ModVec v, std::span<const ModVec> divisors) {
  const FieldSpec& F = order.ring().field();
  const PolyRing& R = order.ring();
  std::vector<std::vector<Term>> q(divisors.size());
  ModVec rem;
  while (!v.empty()) {
    const ModTerm lead = v.front();
    std::size_t k = 0;
    for (; k < divisors.size(); ++k) {
      const ModTerm& d = divisors[k].front();
      if (d.comp == lead.comp && d.mono.divides(lead.mono)) break;
    }
    if (k == divisors.size()) {
      rem.push_back(lead);
      v.erase(v.begin());
      continue;
    }
    Coeff c = F.div(lead.coef, divisors[k].front().coef);
    Monomial m = lead.mono.quotient(divisors[k].front().mono);
    q[k].push_back(Term{m, c});
    v = subMul(order, v, c, m, divisors[k]);
  }
  DivisionResult res;
  res.remainder = std::move(rem);
  for (auto& terms : q) res.quotients.push_back(R.fromTerms(std::move(terms)));
  return res;
}

std::vector<ModVec> syzygyBasis(const ModuleOrder& order, std::span<const ModVec> gb) {
  const PolyRing& R = order.ring();
  const FieldSpec& F = R.field();
  const std::size_t m = gb.size();
  std::vector<int> degs(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (gb[k].empty()) throw Error("syzygyBasis: zero generator");
    degs[k] = order.degreeOf(gb[k].front());
  }
  ModuleOrder target(R, degs);

  // tau_ij (i < j) has Schreyer-leading term (lcm/lt_i) e_i, so for fixed i
  // only the minimal quotients lcm(lt_i, lt_j)/lt_i over j > i are needed.
  std::vector<ModVec> out;
  for (std::size_t i = 0; i < m; ++i) {
    const ModTerm& li = gb[i].front();
    struct Cand {
      std::size_t j;
      Monomial quot;
    };
    std::vector<Cand> cands;
    for (std::size_t j = i + 1; j < m; ++j) {
      const ModTerm& lj = gb[j].front();
      if (li.comp != lj.comp) continue;
      cands.push_back({j, R.lcm(li.mono, lj.mono).quotient(li.mono)});
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool minimal = true;
      for (std::size_t b = 0; b < cands.size() && minimal; ++b) {
        if (a == b || !cands[b].quot.divides(cands[a].quot)) continue;
        if (cands[b].quot != cands[a].quot || b < a) minimal = false;
      }
      if (!minimal) continue;
      std::size_t j = cands[a].j;
      const ModTerm& lj = gb[j].front();
      Monomial L = R.lcm(li.mono, lj.mono);
      Monomial mi = cands[a].quot;
      Monomial mj = L.quotient(lj.mono);
      Coeff ci = F.inv(li.coef);
      Coeff cj = F.inv(lj.coef);
      // S = ci*mi*g_i - cj*mj*g_j
      ModVec s = subMul(order, ModVec{}, F.neg(ci), mi, gb[i]);
      s = subMul(order, s, cj, mj, gb[j]);
      DivisionResult d = divide(order, std::move(s), gb);
      if (!d.remainder.empty()) throw Error("syzygyBasis: input is not a Groebner basis");
      ModVec syz{ModTerm{mi, static_cast<std::uint32_t>(i), ci},
                 ModTerm{mj, static_cast<std::uint32_t>(j), F.neg(cj)}};
      for (std::size_t k = 0; k < m; ++k)
        for (const auto& t : d.quotients[k].terms())
          syz.push_back(ModTerm{t.mono, static_cast<std::uint32_t>(k), F.neg(t.coef)});
      std::sort(syz.begin(), syz.end(),
                [&](const ModTerm& x, const ModTerm& y) { return target.compare(x, y) > 0; });
      ModVec merged;
      for (const auto& t : syz) {
        if (!merged.empty() && merged.back().comp == t.comp && merged.back().mono == t.mono) {
          merged.back().coef = F.add(merged.back().coef, t.coef);
          if (merged.back().coef == 0) merged.pop_back();
        } else {
          merged.push_back(t);
        }
      }
      if (!merged.empty()) out.push_back(std::move(merged));
    }
  }
  return out;
}

}  // namespace gorlab
