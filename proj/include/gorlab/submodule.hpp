#pragma once

#include <optional>
#include <vector>

#include "gorlab/groebner.hpp"
#include "gorlab/hilbert.hpp"
#include "gorlab/matrix.hpp"
#include "gorlab/quotient_ring.hpp"

namespace gorlab {

ModVec toModVec(const FreeVector& v, std::uint32_t offset = 0);
// Terms with component in [offset, offset + rank), shifted down by offset.
FreeVector toFreeVector(const PolyRing& ring, const ModVec& v, std::uint32_t offset,
                        std::size_t rank);

// Groebner basis of U + I*F for a submodule U of the twisted free module F
// over S, i.e. of U viewed inside R^n.
class SubmoduleGB {
 public:
  SubmoduleGB(const QuotientRingCtx& ctx, std::vector<int> degrees,
              const std::vector<FreeVector>& gens);

  const std::vector<int>& degrees() const { return degrees_; }
  // Hilbert series of F / U.
  HilbertSeries quotientSeries() const;
  FreeVector normalForm(const FreeVector& v) const;
  bool contains(const FreeVector& v) const;
  // Indices of a minimal generating subset of `gens` (in order).
  const std::vector<std::size_t>& minimalGenerators() const { return gb_.keptInputs(); }
  // Leading monomials per component, including those of I.
  std::vector<std::vector<Monomial>> leadingMonomials() const {
    return gb_.leadingMonomials(0, degrees_.size());
  }

 private:
  const QuotientRingCtx* ctx_;
  std::vector<int> degrees_;
  ModuleGroebner gb_;
};

// For phi: F -> G and relations W on G computes
//   K = { v in F : phi(v) in im(W) + I*G },
// the kernel of the induced map F -> coker(W), by elimination: the columns
// of phi carry tracking components, the columns of W do not.
class Preimage {
 public:
  Preimage(const QuotientRingCtx& ctx, const Matrix& phi, const Matrix& w);

  // Groebner basis of K (vectors in F).
  const std::vector<FreeVector>& kernelBasis() const { return kernel_; }
  // Hilbert series of F / K, i.e. of the image of phi in coker(W).
  HilbertSeries quotientSeries() const;
  // Minimal homogeneous generators of K as the columns of a matrix F <- (+).
  Matrix minimalKernelMatrix() const;
  // Some c with phi(c) = v modulo im(W) + I*G, or nullopt if there is none.
  std::optional<FreeVector> lift(const FreeVector& v) const;

 private:
  const QuotientRingCtx* ctx_;
  std::vector<int> sourceDegrees_;
  std::size_t targetRank_;
  ModuleGroebner gb_;
  std::vector<FreeVector> kernel_;
  std::vector<std::vector<Monomial>> kernelLeads_;
};

// Minimal generating subset of the columns of `m` modulo I (zero columns
// dropped), as a matrix.
Matrix minimalColumns(const QuotientRingCtx& ctx, const Matrix& m);

}  // namespace gorlab
