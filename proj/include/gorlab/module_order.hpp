#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <vector>

#include "gorlab/poly_ring.hpp"

namespace gorlab {

// One term c * m * e_comp of a free-module element.
struct ModTerm {
  Monomial mono;
  std::uint32_t comp = 0;
  Coeff coef = 0;

  bool operator==(const ModTerm& o) const {
    return comp == o.comp && coef == o.coef && mono == o.mono;
  }
};

// Free-module element as terms sorted strictly descending in a ModuleOrder.
using ModVec = std::vector<ModTerm>;

// Monomial order on a twisted free module  (+)_j S(-a_j).
//
// Components below `eliminationBoundary` form block 0, the rest block 1; every
// block-0 term is larger than every block-1 term. Inside a block the order is
// term-over-position (internal degree, then ring order, then lower component
// index first), position-over-term, or the Schreyer order induced by the
// leading terms of a base family.
class ModuleOrder {
 public:
  enum class Kind { TermOverPosition, PositionOverTerm, Schreyer };
  static constexpr std::size_t kNoElimination = std::numeric_limits<std::size_t>::max();

  ModuleOrder(const PolyRing& ring, std::vector<int> componentDegrees,
              Kind kind = Kind::TermOverPosition,
              std::size_t eliminationBoundary = kNoElimination);

  // Schreyer order: m*e_i < n*e_j iff m*lead_i < n*lead_j in `base`, ties
  // broken so that the lower index is larger.
  static ModuleOrder schreyer(std::shared_ptr<const ModuleOrder> base, std::vector<ModTerm> leads);

  const PolyRing& ring() const { return *ring_; }
  Kind kind() const { return kind_; }
  std::size_t rank() const { return degrees_.size(); }
  const std::vector<int>& componentDegrees() const { return degrees_; }
  std::size_t eliminationBoundary() const { return boundary_; }
  int block(std::uint32_t comp) const { return comp < boundary_ ? 0 : 1; }
  int degreeOf(const ModTerm& t) const { return t.mono.degree() + degrees_[t.comp]; }

  int compare(const ModTerm& a, const ModTerm& b) const {
    if (boundary_ != kNoElimination) {
      int ba = block(a.comp), bb = block(b.comp);
      if (ba != bb) return ba < bb ? 1 : -1;
    }
    switch (kind_) {
      case Kind::TermOverPosition: {
        int da = degreeOf(a), db = degreeOf(b);
        if (da != db) return da < db ? -1 : 1;
        int c = ring_->compareUnchecked(a.mono, b.mono);
        if (c != 0) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
      }
      case Kind::PositionOverTerm: {
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return ring_->compareUnchecked(a.mono, b.mono);
      }
      case Kind::Schreyer:
        return compareSchreyer(a, b);
    }
    return 0;
  }

 private:
  int compareSchreyer(const ModTerm& a, const ModTerm& b) const;

  const PolyRing* ring_;
  std::vector<int> degrees_;
  Kind kind_;
  std::size_t boundary_;
  std::shared_ptr<const ModuleOrder> base_;
  std::vector<ModTerm> leads_;
};

}  // namespace gorlab
