#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "gorlab/poly_ring.hpp"

namespace gorlab::testing {

inline PolyRingPtr makeRing(std::vector<std::string> vars,
                            MonomialOrder order = MonomialOrder::Grevlex) {
  return std::make_shared<const PolyRing>(FieldSpec(101), std::move(vars), order);
}

inline Monomial randomMonomial(const PolyRing& R, std::mt19937_64& rng, int degree) {
  std::vector<int> e(R.nvars(), 0);
  std::uniform_int_distribution<std::size_t> pick(0, R.nvars() - 1);
  for (int k = 0; k < degree; ++k) ++e[pick(rng)];
  return R.monomial(e);
}

// Random polynomial with up to `maxTerms` terms; homogeneous of `degree`
// unless degree < 0, in which case term degrees are drawn from 0..3.
inline Polynomial randomPoly(const PolyRing& R, std::mt19937_64& rng, int maxTerms, int degree) {
  std::uniform_int_distribution<int> nterms(0, maxTerms);
  std::uniform_int_distribution<int> deg(0, 3);
  std::uniform_int_distribution<Coeff> coef(1, R.field().modulus() - 1);
  std::vector<Term> terms;
  int n = nterms(rng);
  for (int k = 0; k < n; ++k)
    terms.push_back(Term{randomMonomial(R, rng, degree >= 0 ? degree : deg(rng)), coef(rng)});
  return R.fromTerms(std::move(terms));
}

inline Polynomial P(const PolyRing& R, const std::string& s) { return R.parse(s); }

}  // namespace gorlab::testing

namespace gorlab::testing {

// Rank of a dense matrix over F_p by Gaussian elimination. Oracle helper,
// independent of the Groebner machinery.
inline std::size_t denseRank(std::vector<std::vector<Coeff>> a, const FieldSpec& F) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    Coeff inv = F.inv(a[rank][c]);
    for (auto& x : a[rank]) x = F.mul(x, inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Coeff f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = F.sub(a[r][k], F.mul(f, a[rank][k]));
    }
    ++rank;
  }
  return rank;
}

// All monomials of exact degree d (standard grading).
inline std::vector<Monomial> monomialsOfDegree(const PolyRing& R, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(R.nvars(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == R.nvars()) {
      e[i] = left;
      out.push_back(R.monomial(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (R.nvars() == 0) return out;
  rec(rec, 0, d);
  return out;
}

// dim_k (S/(gens))_d computed by linear algebra on the degree-d piece of the
// ideal: span of m*g over monomials m of complementary degree.
inline std::int64_t quotientDimInDegree(const PolyRing& R, const std::vector<Polynomial>& gens, int d) {
  auto basis = monomialsOfDegree(R, d);
  std::vector<std::vector<Coeff>> rows;
  for (const auto& g : gens) {
    if (g.isZero() || g.degree() > d) continue;
    for (const auto& m : monomialsOfDegree(R, d - g.degree())) {
      Polynomial h = R.mulTerm(g, 1, m);
      std::vector<Coeff> row(basis.size(), 0);
      for (const auto& t : h.terms())
        for (std::size_t k = 0; k < basis.size(); ++k)
          if (basis[k] == t.mono) row[k] = t.coef;
      rows.push_back(std::move(row));
    }
  }
  return static_cast<std::int64_t>(basis.size() - denseRank(rows, R.field()));
}

}  // namespace gorlab::testing
