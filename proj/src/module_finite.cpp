#include <algorithm>
#include <map>

#include "gorlab/errors.hpp"
#include "gorlab/module_ops.hpp"

namespace gorlab {

namespace {

std::vector<int> exponents(const Monomial& m) {
  std::vector<int> e(m.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = m.exponent(i);
  return e;
}

bool isStandard(const Monomial& m, const std::vector<Monomial>& leads) {
  return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
}

}  // namespace

FiniteLengthRealization finiteLengthRealize(const PresentedModule& m) {
  if (dimModule(m) > 0) throw HypothesisError("module does not have finite length");
  const PolyRing& R = m.ctx().ring();
  const std::size_t nv = R.nvars();
  const auto leads = m.relationGB().leadingMonomials();

  FiniteLengthRealization out;
  std::map<std::pair<std::uint32_t, std::vector<int>>, std::size_t> index;
  for (std::uint32_t g = 0; g < m.numGenerators(); ++g) {
    // Standard monomials form an order ideal: grow it by multiplying with variables.
    std::vector<Monomial> level;
    if (isStandard(R.one(), leads[g])) level.push_back(R.one());
    while (!level.empty()) {
      std::vector<Monomial> next;
      for (const auto& mono : level) {
        index[{g, exponents(mono)}] = 0;
        out.basis.push_back(BasisElement{g, mono, mono.degree() + m.generatorTwists()[g]});
        for (std::size_t v = 0; v < nv; ++v) {
          Monomial up = mono * R.var(v);
          if (isStandard(up, leads[g]) && !index.count({g, exponents(up)}) &&
              std::none_of(next.begin(), next.end(), [&](const Monomial& x) { return x == up; }))
            next.push_back(up);
        }
      }
      level = std::move(next);
    }
  }
  std::stable_sort(out.basis.begin(), out.basis.end(),
                   [](const BasisElement& a, const BasisElement& b) { return a.degree < b.degree; });
  for (std::size_t i = 0; i < out.basis.size(); ++i) {
    index[{out.basis[i].generator, exponents(out.basis[i].mono)}] = i;
    ++out.lengthByDegree[out.basis[i].degree];
  }

  const std::size_t N = out.basis.size();
  out.actions.assign(nv, DenseMatrix(N, std::vector<Coeff>(N, 0)));
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t col = 0; col < N; ++col) {
      const BasisElement& b = out.basis[col];
      FreeVector x{Entry{b.generator, R.term(1, b.mono * R.var(v))}};
      for (const auto& e : m.normalForm(x))
        for (const auto& t : e.value.terms()) {
          auto it = index.find({e.row, exponents(t.mono)});
          if (it == index.end()) throw Error("finite length realization: non-standard normal form");
          out.actions[v][it->second][col] = t.coef;
        }
    }
  return out;
}

PresentedModule matlisDual(const PresentedModule& m) {
  FiniteLengthRealization fl = finiteLengthRealize(m);
  const PolyRing& R = m.ctx().ring();
  const FieldSpec& F = R.field();
  const std::size_t N = fl.basis.size();
  std::vector<int> twists(N);
  for (std::size_t u = 0; u < N; ++u) twists[u] = -fl.basis[u].degree;
  // x_v b_u^* = sum_w X_v[u][w] b_w^*.
  Matrix rel(twists, {});
  for (std::size_t v = 0; v < R.nvars(); ++v)
    for (std::size_t u = 0; u < N; ++u) {
      FreeVector col;
      for (std::size_t w = 0; w < N; ++w) {
        if (w == u) {
          col.push_back(Entry{static_cast<std::uint32_t>(u), R.variable(v)});
        } else if (Coeff c = fl.actions[v][u][w]; c != 0) {
          col.push_back(Entry{static_cast<std::uint32_t>(w), R.constant(F.neg(c))});
        }
      }
      rel.appendColumn(std::move(col), twists[u] + R.weights()[v]);
    }
  return minimalPresentation(PresentedModule(m.ctxPtr(), std::move(rel)));
}

PresentedModule socle(const PresentedModule& m) {
  const PolyRing& R = m.ctx().ring();
  const std::size_t n = m.numGenerators();
  PresentedModule target = PresentedModule::zero(m.ctxPtr());
  for (std::size_t v = 0; v < R.nvars(); ++v) target = directSum(target, twist(m, R.weights()[v]));
  Matrix mat(target.generatorTwists(), m.generatorTwists());
  for (std::size_t j = 0; j < n; ++j) {
    FreeVector col;
    for (std::size_t v = 0; v < R.nvars(); ++v)
      col.push_back(Entry{static_cast<std::uint32_t>(v * n + j), R.variable(v)});
    mat.setColumn(j, std::move(col));
  }
  return kernel(ModuleMap(m, target, std::move(mat)));
}

}  // namespace gorlab
