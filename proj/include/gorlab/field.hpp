#pragma once

#include <cstdint>

namespace gorlab {

using Coeff = std::uint32_t;

// Prime field F_p with 2 <= p < 2^31. Elements are canonical residues in
// [0, p).
class FieldSpec {
 public:
  static constexpr std::uint32_t kDefaultPrime = 101;

  FieldSpec() : FieldSpec(kDefaultPrime) {}
  explicit FieldSpec(std::uint64_t p);

  std::uint32_t modulus() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }
  Coeff fromInt(std::int64_t v) const;
  // Signed representative in (-p/2, p/2], used for printing.
  std::int64_t toSigned(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  bool operator==(const FieldSpec& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool isPrime(std::uint64_t n);

}  // namespace gorlab
