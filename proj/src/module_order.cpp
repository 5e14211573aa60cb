#include "gorlab/module_order.hpp"

#include "gorlab/errors.hpp"

namespace gorlab {

ModuleOrder::ModuleOrder(const PolyRing& ring, std::vector<int> componentDegrees, Kind kind,
                         std::size_t eliminationBoundary)
    : ring_(&ring), degrees_(std::move(componentDegrees)), kind_(kind), boundary_(eliminationBoundary) {
  if (kind == Kind::Schreyer) throw Error("use ModuleOrder::schreyer to build a Schreyer order");
}

ModuleOrder ModuleOrder::schreyer(std::shared_ptr<const ModuleOrder> base, std::vector<ModTerm> leads) {
  std::vector<int> degrees;
  degrees.reserve(leads.size());
  for (const auto& t : leads) degrees.push_back(base->degreeOf(t));
  ModuleOrder order(base->ring(), std::move(degrees));
  order.kind_ = Kind::Schreyer;
  order.base_ = std::move(base);
  order.leads_ = std::move(leads);
  return order;
}

int ModuleOrder::compareSchreyer(const ModTerm& a, const ModTerm& b) const {
  const ModTerm& la = leads_[a.comp];
  const ModTerm& lb = leads_[b.comp];
  ModTerm pa{a.mono * la.mono, la.comp, 1};
  ModTerm pb{b.mono * lb.mono, lb.comp, 1};
  int c = base_->compare(pa, pb);
  if (c != 0) return c;
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

}  // namespace gorlab
