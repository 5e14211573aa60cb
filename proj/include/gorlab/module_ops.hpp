#pragma once

#include <map>
#include <vector>

#include "gorlab/module.hpp"

namespace gorlab {

// Hom(M, N) inside Hom(F_M, N) = coker(I_m (x) B) on the cover
// (+)_{j,k} R(a_j - c_k), index j*p + k; generators given in the cover.
struct HomData {
  PresentedModule module;
  Matrix gensInCover;
  Matrix coverRelations;
};
HomData homData(const PresentedModule& m, const PresentedModule& n);
PresentedModule homModule(const PresentedModule& m, const PresentedModule& n);
// Hom(M, R); generators in (+)_j R(a_j).
HomData dualData(const PresentedModule& m);
PresentedModule dualModule(const PresentedModule& m);

// Generators e_j (x) f_k at index j*p + k, not minimized.
PresentedModule tensorPresentation(const PresentedModule& m, const PresentedModule& n);
PresentedModule tensorModule(const PresentedModule& m, const PresentedModule& n);

// M* (x) N -> Hom(M, N), phi (x) n |-> (x |-> phi(x) n). Source and target are
// tensorPresentation(dual M, N) and homModule(M, N).
ModuleMap naturalMapTensorToHom(const PresentedModule& m, const PresentedModule& n);
// M (x) N* -> Hom(M, N)*, x (x) phi |-> (psi |-> phi(psi(x))).
ModuleMap naturalMapTensorToHomDual(const PresentedModule& m, const PresentedModule& n);
// Homomorphisms modulo those factoring through a free module.
PresentedModule stableHom(const PresentedModule& m, const PresentedModule& n);

// Dense F_p matrix, row-major.
using DenseMatrix = std::vector<std::vector<Coeff>>;

struct BasisElement {
  std::uint32_t generator;
  Monomial mono;
  int degree;
};

// Standard monomial basis of a finite length module and the action of each
// ring variable: actions[v][row][col] is the coefficient of basis[row] in
// x_v * basis[col].
struct FiniteLengthRealization {
  std::vector<BasisElement> basis;
  std::vector<DenseMatrix> actions;
  std::map<int, std::int64_t> lengthByDegree;
  std::int64_t length() const { return static_cast<std::int64_t>(basis.size()); }
};
// Throws HypothesisError unless M has finite length.
FiniteLengthRealization finiteLengthRealize(const PresentedModule& m);
// Graded k-dual with transposed actions, minimally presented.
PresentedModule matlisDual(const PresentedModule& m);
// (0 :_M m), the elements killed by every variable.
PresentedModule socle(const PresentedModule& m);

}  // namespace gorlab
