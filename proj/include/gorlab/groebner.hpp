#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gorlab/module_order.hpp"
#include "gorlab/poly_ring.hpp"

namespace gorlab {

struct GroebnerOptions {
  // Tail-reduce every basis element at the end (reduced Groebner basis).
  bool reduceBasis = false;
  int degreeCap = 64;
  std::size_t maxBasisSize = 400000;
};

// Buchberger's algorithm for homogeneous submodules of a twisted free module
// over S = F_p[x], optionally modulo an ideal I given by its Groebner basis.
// The I*e_j generators are never materialised: reduction and S-pairs against
// them are implicit.
//
// S-pairs are processed degree by degree (normal selection) with the
// Gebauer-Moeller installation of Buchberger's chain criterion; the coprime
// criterion is applied to pairs against I and in the plain polynomial case.
class ModuleGroebner {
 public:
  ModuleGroebner(ModuleOrder order, std::span<const Polynomial> implicitIdeal,
                 GroebnerOptions options = {});

  const ModuleOrder& order() const { return order_; }
  const PolyRing& ring() const { return order_.ring(); }

  // Homogeneous input; terms need not be sorted. Throws InhomogeneousError.
  void addInput(ModVec v);
  void run();

  // Basis elements in insertion order, each monic.
  const std::vector<ModVec>& basis() const { return basis_; }
  // Inputs are reduced after all S-pairs of their degree and after the
  // inputs of that degree added before them. Those whose block-0 part
  // survives form a minimal generating set of the block-0 projection of the
  // submodule (modulo I); the others are reported as pruned.
  const std::vector<std::size_t>& keptInputs() const { return kept_; }
  const std::vector<std::size_t>& prunedInputs() const { return pruned_; }

  // Full normal form with respect to the current basis and I.
  ModVec normalForm(ModVec v) const { return reduce(std::move(v), true); }
  bool reducesToZero(ModVec v) const { return reduce(std::move(v), false).empty(); }

  // Leading monomials per component in [lo, hi) including those of I.
  std::vector<std::vector<Monomial>> leadingMonomials(std::size_t lo, std::size_t hi) const;

  // Statistics.
  std::size_t pairsReduced() const { return pairsReduced_; }

  // Sorts and combines terms in this order.
  ModVec canonical(ModVec v) const;

 private:
  struct Pair {
    std::uint32_t i;
    std::int32_t j;  // >= 0: basis index, < 0: -(k+1) for I element k
    std::uint32_t comp;
    int degree;
    Monomial lcm;
    bool coprime;  // product criterion applies
  };

  ModVec reduce(ModVec v, bool full) const;
  // Leading term reducer: basis index >= 0, I index as -(k+1), or nullopt.
  std::optional<std::int32_t> findReducer(const ModTerm& t) const;
  void subtractMultiple(ModVec& cur, std::size_t pos, Coeff c, const Monomial& m,
                        std::int32_t reducer, std::uint32_t comp, ModVec& scratch) const;
  const Monomial& leadMono(std::int32_t r) const {
    return r >= 0 ? leads_[r].mono : ideal_[-r - 1].leading().mono;
  }
  ModVec sPolynomial(const Pair& p) const;
  void insert(ModVec v);
  void updatePairs(std::uint32_t t);
  void makeMonic(ModVec& v) const;
  int vecDegree(const ModVec& v) const { return order_.degreeOf(v.front()); }
  void finalizeBasis();

  ModuleOrder order_;
  std::vector<Polynomial> ideal_;
  GroebnerOptions options_;
  bool polynomialMode_ = false;

  struct PendingInput {
    ModVec vec;
    int degree;
    std::size_t index;
  };
  std::vector<PendingInput> inputs_;
  std::vector<ModVec> basis_;
  std::vector<ModTerm> leads_;
  std::vector<std::vector<std::uint32_t>> byComp_;  // basis indices per component
  std::vector<Pair> pairs_;
  std::vector<std::size_t> kept_;
  std::vector<std::size_t> pruned_;
  std::size_t pairsReduced_ = 0;
  bool ran_ = false;
};

// Reduced Groebner basis of a homogeneous ideal, sorted by leading monomial
// ascending.
std::vector<Polynomial> groebnerBasis(const PolyRing& ring, std::span<const Polynomial> gens,
                                      GroebnerOptions options = {});

// Remainder of f under full division by `divisors` (first divisor whose
// leading monomial divides wins). With a Groebner basis this is the normal
// form.
Polynomial polyNormalForm(const PolyRing& ring, const Polynomial& f,
                          std::span<const Polynomial> divisors);

struct DivisionResult {
  ModVec remainder;
  // quotients[k] is the multiplier of divisors[k].
  std::vector<Polynomial> quotients;
};

// v = sum quotients[k] * divisors[k] + remainder, no remainder term divisible
// by a divisor leading term. Divisors must be sorted and nonzero.
DivisionResult divide(const ModuleOrder& order, ModVec v, std::span<const ModVec> divisors);

// Schreyer's construction: for a Groebner basis g_1..g_m (sorted in `order`)
// returns generators of all relations sum h_k g_k = 0, as vectors in the free
// module with basis e_1..e_m and twists deg g_k. Pairs are pruned to the
// minimal generators of the monomial ideals (lt_j : lt_i) over j > i, so the
// result is a Groebner basis for the induced Schreyer order.
std::vector<ModVec> syzygyBasis(const ModuleOrder& order, std::span<const ModVec> gb);

}  // namespace gorlab
