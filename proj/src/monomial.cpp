#include "gorlab/monomial.hpp"

#include <algorithm>
#include <string>

#include "gorlab/errors.hpp"

namespace gorlab {

Monomial::Monomial(std::span<const int> exponents, std::span<const int> weights) {
  if (exponents.size() > kMaxVars)
    throw Error("at most " + std::to_string(kMaxVars) + " variables are supported");
  nvars_ = static_cast<std::uint8_t>(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    int e = exponents[i];
    if (e < 0 || e > kMaxExponent)
      throw Error("exponent " + std::to_string(e) + " outside [0, " +
                  std::to_string(kMaxExponent) + "]");
    words_[i >> 3] |= static_cast<std::uint64_t>(e) << (8 * (i & 7));
    degree_ += e * (i < weights.size() ? weights[i] : 1);
  }
}

bool Monomial::coprime(const Monomial& b) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exponent(i) > 0 && b.exponent(i) > 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
  Monomial r;
  r.words_[0] = words_[0] + o.words_[0];
  r.words_[1] = words_[1] + o.words_[1];
  if (((r.words_[0] | r.words_[1]) & kHigh) != 0)
    throw Error("exponent overflow (max " + std::to_string(kMaxExponent) + ")");
  r.degree_ = degree_ + o.degree_;
  r.nvars_ = std::max(nvars_, o.nvars_);
  return r;
}

Monomial Monomial::lcm(const Monomial& o, std::span<const int> weights) const {
  Monomial r;
  r.nvars_ = std::max(nvars_, o.nvars_);
  for (std::size_t i = 0; i < r.nvars_; ++i) {
    int e = std::max(exponent(i), o.exponent(i));
    r.words_[i >> 3] |= static_cast<std::uint64_t>(e) << (8 * (i & 7));
    r.degree_ += e * (i < weights.size() ? weights[i] : 1);
  }
  return r;
}

}  // namespace gorlab
