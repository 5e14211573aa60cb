#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gorlab/monomial.hpp"

namespace gorlab {

// Laurent polynomial in t with integer coefficients; no zero entries stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int e, std::int64_t c = 1);

  const std::map<int, std::int64_t>& coefficients() const { return c_; }
  std::int64_t at(int e) const;
  bool isZero() const { return c_.empty(); }
  std::int64_t valueAtOne() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly shifted(int e) const;
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  // Exact division by (1 - t). Precondition: valueAtOne() == 0.
  LaurentPoly divideOneMinusT() const;

  std::string toString() const;

 private:
  void addTerm(int e, std::int64_t c);
  std::map<int, std::int64_t> c_;
};

// Krull dimension and multiplicity of a graded module; dimension -1 for the
// zero module. For dimension 0 the multiplicity is the length. Ordered
// lexicographically, which is the order of growth of the Hilbert function.
struct ModuleSize {
  int dim = -1;
  std::int64_t multiplicity = 0;

  bool isZero() const { return dim < 0; }
  bool finiteLength() const { return dim <= 0; }
  auto operator<=>(const ModuleSize&) const = default;
  // Size of a module with a filtration by pieces of the two sizes.
  ModuleSize operator+(const ModuleSize& o) const;
  std::string toString() const;
};

// Hilbert series N(t) / prod_i (1 - t^{w_i}) of a graded S-module.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(LaurentPoly numerator, std::vector<int> weights);

  const LaurentPoly& numerator() const { return num_; }
  // N(t) / (1 - t)^(n - dim): numerator over (1 - t)^dim in standard grading.
  const LaurentPoly& reducedNumerator() const { return reduced_; }
  const std::vector<int>& weights() const { return weights_; }

  // Pole order at t = 1; -1 for the zero series.
  int dimension() const { return size_.dim; }
  ModuleSize size() const { return size_; }
  // Hilbert function values for degrees lo..hi.
  std::vector<std::int64_t> hilbertFunction(int lo, int hi) const;
  // Sum of the Hilbert function; requires dimension() <= 0.
  std::int64_t length() const;
  // Lowest degree with a nonzero Hilbert function value, for dimension 0
  // series also the highest. Undefined for the zero series.
  int lowestDegree() const;
  int highestDegree() const;

  bool operator==(const HilbertSeries& o) const {
    return num_ == o.num_ && weights_ == o.weights_;
  }

 private:
  LaurentPoly num_;
  LaurentPoly reduced_;
  std::vector<int> weights_;
  ModuleSize size_;
};

// Numerator K(J) of the Hilbert series of S/J for a monomial ideal J,
// computed by pivoting on variable powers: K(J) = K(J + p) + t^deg(p) K(J : p).
LaurentPoly monomialIdealNumerator(std::vector<Monomial> gens, std::span<const int> weights);

// Hilbert series of (+)_c S(-a_c) / (+)_c J_c e_c.
HilbertSeries monomialModuleSeries(const std::vector<std::vector<Monomial>>& perComponent,
                                   std::span<const int> twists, std::span<const int> weights);

}  // namespace gorlab
