#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace gorlab {

// Exponent vector over at most 16 variables, packed one byte per variable
// into two 64-bit words. Exponents are capped at 127 so that divisibility is
// a pair of word operations. The weighted degree is cached.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 16;
  static constexpr int kMaxExponent = 127;

  Monomial() = default;
  // Throws on too many variables, negative or oversized exponents.
  Monomial(std::span<const int> exponents, std::span<const int> weights);

  static Monomial one(std::size_t nvars) {
    Monomial m;
    m.nvars_ = static_cast<std::uint8_t>(nvars);
    return m;
  }

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int exponent(std::size_t i) const {
    return static_cast<int>((words_[i >> 3] >> (8 * (i & 7))) & 0xffU);
  }
  bool isOne() const { return (words_[0] | words_[1]) == 0; }

  bool divides(const Monomial& b) const {
    constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
    return (((b.words_[0] | kHigh) - words_[0]) & kHigh) == kHigh &&
           (((b.words_[1] | kHigh) - words_[1]) & kHigh) == kHigh;
  }
  bool coprime(const Monomial& b) const;

  // Product; throws Error when an exponent exceeds kMaxExponent.
  Monomial operator*(const Monomial& o) const;
  // Precondition: divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const {
    Monomial r;
    r.words_[0] = words_[0] - divisor.words_[0];
    r.words_[1] = words_[1] - divisor.words_[1];
    r.degree_ = degree_ - divisor.degree_;
    r.nvars_ = nvars_;
    return r;
  }
  // Exponentwise max; the degree is recomputed from the weights.
  Monomial lcm(const Monomial& o, std::span<const int> weights) const;

  bool operator==(const Monomial& o) const {
    return words_ == o.words_ && nvars_ == o.nvars_;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::size_t hash() const {
    std::uint64_t h = words_[0] * 0x9E3779B97F4A7C15ULL ^ (words_[1] + 0x7F4A7C15ULL);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

 private:
  std::array<std::uint64_t, 2> words_{};
  std::int32_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace gorlab
