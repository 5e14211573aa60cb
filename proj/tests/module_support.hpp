#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gorlab/module.hpp"
#include "gorlab/quotient_ring.hpp"
#include "support.hpp"

namespace gorlab::testing {

inline CtxPtr makeCtx(std::vector<std::string> vars, const std::vector<std::string>& rels) {
  auto R = makeRing(std::move(vars));
  std::vector<Polynomial> ps;
  for (const auto& s : rels) ps.push_back(R->parse(s));
  return QuotientRingCtx::create(R, std::move(ps));
}

// k[w,x,y,z]/(wx - yz), k[x,y]/(x^2,y^2), k[x,y,z]/(xy,xz,yz,x^2-y^2,x^2-z^2).
inline CtxPtr ringR1() { return makeCtx({"w", "x", "y", "z"}, {"w*x - y*z"}); }
inline CtxPtr ringR2() { return makeCtx({"x", "y"}, {"x^2", "y^2"}); }
inline CtxPtr ringR3() {
  return makeCtx({"x", "y", "z"}, {"x*y", "x*z", "y*z", "x^2 - y^2", "x^2 - z^2"});
}

// Matrix given row by row; column degrees inferred from the first nonzero
// entry (or `zeroColDegree` for an all-zero column).
inline Matrix makeMatrix(const PolyRing& R, std::vector<int> rowDegrees,
                         const std::vector<std::vector<std::string>>& rows, int zeroColDegree = 0) {
  const std::size_t nc = rows.empty() ? 0 : rows[0].size();
  std::vector<int> colDeg(nc, zeroColDegree);
  std::vector<FreeVector> cols(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    bool set = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Polynomial p = R.parse(rows[r][c]);
      if (p.isZero()) continue;
      if (!set) colDeg[c] = rowDegrees[r] + p.degree();
      set = true;
      cols[c].push_back(Entry{static_cast<std::uint32_t>(r), std::move(p)});
    }
  }
  Matrix m(std::move(rowDegrees), colDeg);
  for (std::size_t c = 0; c < nc; ++c) m.setColumn(c, std::move(cols[c]));
  return m;
}

inline PresentedModule coker(const CtxPtr& ctx, std::vector<int> rowDegrees,
                             const std::vector<std::vector<std::string>>& rows) {
  return PresentedModule(ctx, makeMatrix(ctx->ring(), std::move(rowDegrees), rows));
}

// dim_k M_d for M = coker(A) over S/I by dense linear algebra on F_d:
// the span of monomial multiples of the relation columns and of I*F.
// Independent of every Groebner computation.
inline std::int64_t moduleDimInDegree(const PresentedModule& M, int d) {
  const QuotientRingCtx& ctx = M.ctx();
  const PolyRing& R = ctx.ring();
  const auto& a = M.generatorTwists();
  std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> idx;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (d - a[j] < 0) continue;
    for (const auto& m : monomialsOfDegree(R, d - a[j])) {
      std::vector<int> e(R.nvars());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = m.exponent(i);
      idx.emplace(std::make_pair(j, e), idx.size());
    }
  }
  std::vector<std::vector<Coeff>> rows;
  auto addRow = [&](const FreeVector& v, const Monomial& mult) {
    std::vector<Coeff> row(idx.size(), 0);
    for (const auto& en : v)
      for (const auto& t : en.value.terms()) {
        Monomial mm = t.mono * mult;
        std::vector<int> e(R.nvars());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = mm.exponent(i);
        row[idx.at({en.row, e})] = R.field().add(row[idx.at({en.row, e})], t.coef);
      }
    rows.push_back(std::move(row));
  };
  for (std::size_t c = 0; c < M.numRelations(); ++c) {
    int k = d - M.relationTwists()[c];
    if (k < 0 || M.relations().column(c).empty()) continue;
    for (const auto& m : monomialsOfDegree(R, k)) addRow(M.relations().column(c), m);
  }
  for (std::size_t j = 0; j < a.size(); ++j)
    for (const auto& f : ctx.relations()) {
      int k = d - a[j] - f.degree();
      if (k < 0) continue;
      for (const auto& m : monomialsOfDegree(R, k))
        addRow(FreeVector{Entry{static_cast<std::uint32_t>(j), f}}, m);
    }
  return static_cast<std::int64_t>(idx.size() - denseRank(std::move(rows), R.field()));
}

inline std::vector<std::int64_t> moduleHilbertOracle(const PresentedModule& M, int lo, int hi) {
  std::vector<std::int64_t> out;
  for (int d = lo; d <= hi; ++d) out.push_back(moduleDimInDegree(M, d));
  return out;
}

// Random homogeneous presentation: 1..maxGens generators in degrees 0..1,
// 0..maxRels relations of degree at most max(a)+maxRelDegree.
inline PresentedModule randomPresentation(const CtxPtr& ctx, std::mt19937_64& rng, int maxGens = 3,
                                          int maxRels = 3, int maxRelDegree = 2) {
  const PolyRing& R = ctx->ring();
  std::uniform_int_distribution<int> ng(1, maxGens), nr(0, maxRels), tw(0, 1),
      rd(1, maxRelDegree);
  std::vector<int> a(ng(rng));
  for (int& x : a) x = tw(rng);
  int top = *std::max_element(a.begin(), a.end());
  Matrix m(a, {});
  int rels = nr(rng);
  for (int c = 0; c < rels; ++c) {
    int b = top + rd(rng);
    FreeVector col;
    for (std::size_t j = 0; j < a.size(); ++j) {
      Polynomial p = ctx->reduce(randomPoly(R, rng, 3, b - a[j]));
      if (!p.isZero()) col.push_back(Entry{static_cast<std::uint32_t>(j), std::move(p)});
    }
    if (!col.empty()) m.appendColumn(std::move(col), b);
  }
  return PresentedModule(ctx, std::move(m));
}

// Degree-e piece of the cover of N with the spanning set of its relation
// subspace (relations and I times the cover).
struct DegreePiece {
  std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> index;
  std::vector<std::vector<Coeff>> relationRows;
};

inline std::vector<int> exponentVector(const Monomial& m) {
  std::vector<int> e(m.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = m.exponent(i);
  return e;
}

inline DegreePiece degreePiece(const PresentedModule& N, int e) {
  const PolyRing& R = N.ctx().ring();
  DegreePiece out;
  const auto& c = N.generatorTwists();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (e - c[k] >= 0)
      for (const auto& m : monomialsOfDegree(R, e - c[k]))
        out.index.emplace(std::make_pair(k, exponentVector(m)), out.index.size());
  auto addRow = [&](const FreeVector& v, const Monomial& mult) {
    std::vector<Coeff> row(out.index.size(), 0);
    for (const auto& en : v)
      for (const auto& t : en.value.terms()) {
        std::size_t i = out.index.at({en.row, exponentVector(t.mono * mult)});
        row[i] = R.field().add(row[i], t.coef);
      }
    out.relationRows.push_back(std::move(row));
  };
  for (std::size_t r = 0; r < N.numRelations(); ++r) {
    int k = e - N.relationTwists()[r];
    if (k < 0 || N.relations().column(r).empty()) continue;
    for (const auto& m : monomialsOfDegree(R, k)) addRow(N.relations().column(r), m);
  }
  for (std::size_t j = 0; j < c.size(); ++j)
    for (const auto& f : N.ctx().relations()) {
      int k = e - c[j] - f.degree();
      if (k < 0) continue;
      for (const auto& m : monomialsOfDegree(R, k))
        addRow(FreeVector{Entry{static_cast<std::uint32_t>(j), f}}, m);
    }
  return out;
}

// dim_k Hom(M, N)_d: tuples (n_j in N_{a_j+d}) killed by the relations of M.
inline std::int64_t homDimInDegree(const PresentedModule& M, const PresentedModule& N, int d) {
  const PolyRing& R = N.ctx().ring();
  const FieldSpec& F = R.field();
  const auto& a = M.generatorTwists();
  const auto& b = M.relationTwists();
  std::vector<DegreePiece> src, tgt;
  std::vector<std::size_t> srcOff, tgtOff;
  std::size_t srcDim = 0, tgtDim = 0;
  for (int aj : a) {
    srcOff.push_back(srcDim);
    src.push_back(degreePiece(N, aj + d));
    srcDim += src.back().index.size();
  }
  for (int bi : b) {
    tgtOff.push_back(tgtDim);
    tgt.push_back(degreePiece(N, bi + d));
    tgtDim += tgt.back().index.size();
  }
  // Relation subspace of the target, then the same plus the image of L.
  std::vector<std::vector<Coeff>> U;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (const auto& r : tgt[i].relationRows) {
      std::vector<Coeff> row(tgtDim, 0);
      for (std::size_t x = 0; x < r.size(); ++x) row[tgtOff[i] + x] = r[x];
      U.push_back(std::move(row));
    }
  std::vector<std::vector<Coeff>> UL = U;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (const auto& [key, pos] : src[j].index) {
      std::vector<Coeff> row(tgtDim, 0);
      Monomial mu = R.monomial(key.second);
      for (std::size_t i = 0; i < b.size(); ++i) {
        Polynomial aji = M.relations().at(j, i);
        for (const auto& t : aji.terms()) {
          std::size_t x = tgt[i].index.at({key.first, exponentVector(t.mono * mu)});
          row[tgtOff[i] + x] = F.add(row[tgtOff[i] + x], t.coef);
        }
      }
      UL.push_back(std::move(row));
    }
  std::int64_t rankU = static_cast<std::int64_t>(denseRank(U, F));
  std::int64_t rankUL = static_cast<std::int64_t>(denseRank(UL, F));
  std::int64_t kerDim = static_cast<std::int64_t>(srcDim) - (rankUL - rankU);
  std::int64_t trivial = 0;
  for (std::size_t j = 0; j < a.size(); ++j)
    trivial += static_cast<std::int64_t>(denseRank(src[j].relationRows, F));
  return kerDim - trivial;
}

}  // namespace gorlab::testing
