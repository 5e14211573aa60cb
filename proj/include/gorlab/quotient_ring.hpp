#pragma once

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "gorlab/groebner.hpp"
#include "gorlab/hilbert.hpp"
#include "gorlab/matrix.hpp"
#include "gorlab/poly_ring.hpp"

namespace gorlab {

// Type-erased memo table shared by all computations over one context.
// Readers take a shared lock, insertion an exclusive one.
class ContextCache {
 public:
  template <class T>
  std::shared_ptr<const T> find(const std::string& key) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return nullptr;
    return std::static_pointer_cast<const T>(it->second);
  }
  // Keeps an existing entry; returns whatever ends up stored.
  template <class T>
  std::shared_ptr<const T> insert(const std::string& key, std::shared_ptr<const T> value) {
    std::unique_lock lock(mu_);
    auto [it, fresh] = map_.emplace(key, std::move(value));
    return std::static_pointer_cast<const T>(it->second);
  }
  // Replaces any existing entry.
  template <class T>
  void assign(const std::string& key, std::shared_ptr<const T> value) {
    std::unique_lock lock(mu_);
    map_[key] = std::move(value);
  }
  std::size_t size() const {
    std::shared_lock lock(mu_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, std::shared_ptr<const void>> map_;
};

// R = S / I for a homogeneous ideal I. Elements of R are represented by
// their normal forms modulo the reduced Groebner basis of I.
class QuotientRingCtx {
 public:
  static std::shared_ptr<const QuotientRingCtx> create(PolyRingPtr ring,
                                                       std::vector<Polynomial> relations,
                                                       int degreeCap = 64);

  const PolyRing& ring() const { return *ring_; }
  const PolyRingPtr& ringPtr() const { return ring_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const std::vector<Polynomial>& idealBasis() const { return gb_; }
  int dim() const { return hilbert_.dimension(); }
  const HilbertSeries& hilbert() const { return hilbert_; }
  int degreeCap() const { return degreeCap_; }
  GroebnerOptions groebnerOptions() const {
    GroebnerOptions o;
    o.degreeCap = degreeCap_;
    return o;
  }
  // Minimal number of generators of the maximal ideal.
  int embeddingDimension() const { return embdim_; }

  Polynomial reduce(const Polynomial& f) const { return polyNormalForm(*ring_, f, gb_); }
  Polynomial mul(const Polynomial& f, const Polynomial& g) const {
    return reduce(ring_->mul(f, g));
  }

  Matrix reduce(const Matrix& a) const;
  // A * B over R (entries reduced).
  Matrix multiply(const Matrix& a, const Matrix& b) const;
  FreeVector apply(const Matrix& a, const FreeVector& v) const;
  Matrix identity(const std::vector<int>& degrees) const {
    return Matrix::identity(degrees, ring_->nvars());
  }
  // Kronecker products with identities: A (x) I_p and I_p (x) A.
  Matrix kronIdentityRight(const Matrix& a, const std::vector<int>& degrees) const;
  Matrix kronIdentityLeft(const std::vector<int>& degrees, const Matrix& a) const;

  bool sameAs(const QuotientRingCtx& o) const {
    return this == &o || (*ring_ == *o.ring_ && gb_ == o.gb_);
  }
  std::string toString() const;

  ContextCache& cache() const { return cache_; }

 private:
  QuotientRingCtx() = default;

  PolyRingPtr ring_;
  std::vector<Polynomial> relations_;
  std::vector<Polynomial> gb_;
  HilbertSeries hilbert_;
  int degreeCap_ = 64;
  int embdim_ = 0;
  mutable ContextCache cache_;
};

using CtxPtr = std::shared_ptr<const QuotientRingCtx>;

// Generators of a submodule of R^rank lifted to S^rank: the given vectors
// followed by f*e_j for every f in the ideal basis and every component j.
std::vector<ModVec> liftOverQuotient(const QuotientRingCtx& ctx, std::span<const ModVec> gens,
                                     std::size_t rank);

// Throws MismatchError unless both contexts describe the same ring.
void requireSameContext(const QuotientRingCtx& a, const QuotientRingCtx& b);

}  // namespace gorlab
