#include "gorlab/field.hpp"

#include <string>

#include "gorlab/errors.hpp"

namespace gorlab {

namespace {

std::uint64_t powMod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace

// Deterministic Miller-Rabin; these bases are exact below 3.3e24.
bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint64_t p) {
  if (p < 2 || p >= (1ULL << 31))
    throw Error("field modulus out of range [2, 2^31): " + std::to_string(p));
  if (!isPrime(p)) throw Error("field modulus is not prime: " + std::to_string(p));
  p_ = static_cast<std::uint32_t>(p);
}

Coeff FieldSpec::inv(Coeff a) const {
  if (a == 0) throw Error("division by zero in F_" + std::to_string(p_));
  std::int64_t t = 0, newT = 1;
  std::int64_t r = p_, newR = a;
  while (newR != 0) {
    std::int64_t q = r / newR;
    std::int64_t tmp = t - q * newT;
    t = newT;
    newT = tmp;
    tmp = r - q * newR;
    r = newR;
    newR = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Coeff>(t);
}

Coeff FieldSpec::fromInt(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<Coeff>(m);
}

}  // namespace gorlab
