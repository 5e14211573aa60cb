#include "gorlab/resolution.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gorlab/errors.hpp"

namespace gorlab {

FreeComplex::FreeComplex(int lo, std::vector<std::vector<int>> twists,
                         std::vector<Matrix> differentials)
    : lo_(lo), twists_(std::move(twists)), d_(std::move(differentials)) {
  if (twists_.empty()) throw Error("complex without modules");
  if (d_.size() + 1 != twists_.size()) throw Error("complex: wrong number of differentials");
  for (std::size_t k = 0; k < d_.size(); ++k)
    if (d_[k].colDegrees() != twists_[k + 1] || d_[k].rowDegrees() != twists_[k])
      throw MismatchError("complex: differential does not match the module twists");
}

bool FreeComplex::composesToZero(const QuotientRingCtx& ctx) const {
  for (std::size_t k = 1; k < d_.size(); ++k)
    if (!ctx.multiply(d_[k - 1], d_[k]).isZero()) return false;
  return true;
}

bool FreeComplex::isMinimal(const QuotientRingCtx& ctx) const {
  for (const auto& m : d_)
    for (const auto& c : m.columns())
      for (const auto& e : c)
        if (ctx.ring().isConstant(e.value)) return false;
  return true;
}

FreeComplex FreeComplex::dual() const {
  const int h = hi();
  std::vector<std::vector<int>> tw;
  std::vector<Matrix> ds;
  // (C*)_j = (C_{-j-1})^*, j from -h-1 up to -lo-1.
  for (int j = -h - 1; j <= -lo_ - 1; ++j) {
    std::vector<int> t = twists(-j - 1);
    for (int& x : t) x = -x;
    tw.push_back(std::move(t));
    if (j > -h - 1) ds.push_back(d(-j).transpose());
  }
  return FreeComplex(-h - 1, std::move(tw), std::move(ds));
}

BettiTable BettiTable::of(const FreeComplex& c) {
  BettiTable b;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    auto& row = b.entries[i];
    for (int a : c.twists(i)) ++row[a];
  }
  return b;
}

std::int64_t BettiTable::total(int i) const {
  auto it = entries.find(i);
  if (it == entries.end()) return 0;
  std::int64_t s = 0;
  for (const auto& [j, v] : it->second) s += v;
  return s;
}

std::vector<std::int64_t> BettiTable::totals(int lo, int hi) const {
  std::vector<std::int64_t> out;
  for (int i = lo; i <= hi; ++i) out.push_back(total(i));
  return out;
}

std::string BettiTable::toText() const {
  if (entries.empty()) return "(empty)\n";
  int ilo = entries.begin()->first, ihi = entries.rbegin()->first;
  int rlo = 0, rhi = 0;
  bool any = false;
  for (const auto& [i, row] : entries)
    for (const auto& [j, v] : row) {
      if (!v) continue;
      rlo = any ? std::min(rlo, j - i) : j - i;
      rhi = any ? std::max(rhi, j - i) : j - i;
      any = true;
    }
  std::ostringstream os;
  const int w = 6;
  os.width(w);
  os << "";
  for (int i = ilo; i <= ihi; ++i) {
    os.width(w);
    os << i;
  }
  os << "\n";
  os.width(w);
  os << "total:";
  for (int i = ilo; i <= ihi; ++i) {
    os.width(w);
    os << total(i);
  }
  os << "\n";
  for (int r = rlo; any && r <= rhi; ++r) {
    os.width(w - 1);
    os << r << ":";
    for (int i = ilo; i <= ihi; ++i) {
      std::int64_t v = 0;
      if (auto it = entries.find(i); it != entries.end())
        if (auto jt = it->second.find(i + r); jt != it->second.end()) v = jt->second;
      os.width(w);
      if (v)
        os << v;
      else
        os << ".";
    }
    os << "\n";
  }
  return os.str();
}

std::string BettiTable::toJson() const {
  nlohmann::json j;
  j["schema"] = "gorlab.betti/1";
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [i, row] : entries) {
    nlohmann::json degs = nlohmann::json::object();
    for (const auto& [d, v] : row)
      if (v) degs[std::to_string(d)] = v;
    rows.push_back({{"index", i}, {"total", total(i)}, {"degrees", degs}});
  }
  j["entries"] = rows;
  return j.dump();
}

}  // namespace gorlab
