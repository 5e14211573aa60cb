#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gorlab/hilbert.hpp"
#include "gorlab/matrix.hpp"
#include "gorlab/quotient_ring.hpp"
#include "gorlab/submodule.hpp"

namespace gorlab {

// coker( (+)_i R(-b_i) -> (+)_j R(-a_j) ). Entries are kept reduced mod I.
class PresentedModule {
 public:
  PresentedModule(CtxPtr ctx, Matrix relations);

  static PresentedModule free(CtxPtr ctx, std::vector<int> twists);
  static PresentedModule zero(CtxPtr ctx);
  // R/J twisted so the generator sits in degree `twist`.
  static PresentedModule cyclic(CtxPtr ctx, const std::vector<Polynomial>& ideal, int twist = 0);
  static PresentedModule residueField(CtxPtr ctx);

  const QuotientRingCtx& ctx() const { return *ctx_; }
  const CtxPtr& ctxPtr() const { return ctx_; }
  const Matrix& relations() const { return rel_; }
  const std::vector<int>& generatorTwists() const { return rel_.rowDegrees(); }
  const std::vector<int>& relationTwists() const { return rel_.colDegrees(); }
  std::size_t numGenerators() const { return rel_.rows(); }
  std::size_t numRelations() const { return rel_.cols(); }

  // Groebner basis of the relations (computed once, thread safe).
  const SubmoduleGB& relationGB() const;
  HilbertSeries hilbertSeries() const { return relationGB().quotientSeries(); }
  ModuleSize size() const { return hilbertSeries().size(); }
  FreeVector normalForm(const FreeVector& v) const { return relationGB().normalForm(v); }
  bool isZeroElement(const FreeVector& v) const { return relationGB().contains(v); }

  std::string toString() const;

 private:
  struct Lazy;
  CtxPtr ctx_;
  Matrix rel_;
  std::shared_ptr<Lazy> lazy_;
};

// Degree-0 map on generators: column j is the image of source generator j.
class ModuleMap {
 public:
  // Throws MismatchError on shape, twist or well-definedness failure.
  ModuleMap(PresentedModule source, PresentedModule target, Matrix matrix);

  static ModuleMap identity(const PresentedModule& m);
  static ModuleMap zero(const PresentedModule& source, const PresentedModule& target);

  const PresentedModule& source() const { return src_; }
  const PresentedModule& target() const { return tgt_; }
  const Matrix& matrix() const { return mat_; }

 private:
  PresentedModule src_;
  PresentedModule tgt_;
  Matrix mat_;
};

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g o f
bool isZeroMap(const ModuleMap& f);

PresentedModule directSum(const PresentedModule& a, const PresentedModule& b);
// M(d): the generators move to degrees a_j - d.
PresentedModule twist(const PresentedModule& m, int d);

// Minimal presentation with the comparison maps: toNew(old gens) and
// fromNew(new gens), both expressed on generators.
struct MinimalPresentation {
  PresentedModule module;
  Matrix toNew;    // rows: new generators, columns: old generators
  Matrix fromNew;  // rows: old generators, columns: new generators
};
MinimalPresentation minimize(const PresentedModule& m);
PresentedModule minimalPresentation(const PresentedModule& m);

// (im G + im W) / im W for G, W with rows in the same free module F, with
// the chosen generators written in F.
struct Subquotient {
  PresentedModule module;
  Matrix gensInCover;
};
Subquotient subquotient(const CtxPtr& ctx, const Matrix& gens, const Matrix& rels);

PresentedModule cokernel(const ModuleMap& f);
PresentedModule kernel(const ModuleMap& f);
PresentedModule image(const ModuleMap& f);
// ker f with its inclusion into the source.
ModuleMap kernelInclusion(const ModuleMap& f);
// Hilbert series of ker g / im f for L -f-> M -g-> N with g o f = 0.
HilbertSeries homologySeries(const ModuleMap& f, const ModuleMap& g);

bool isZero(const PresentedModule& m);
bool isFree(const PresentedModule& m);
int dimModule(const PresentedModule& m);
// nullopt when the module has positive dimension.
std::optional<std::int64_t> lengthModule(const PresentedModule& m);

// Numerator difference of two series over the same weights.
HilbertSeries seriesDifference(const HilbertSeries& a, const HilbertSeries& b);
HilbertSeries seriesSum(const HilbertSeries& a, const HilbertSeries& b);

}  // namespace gorlab
