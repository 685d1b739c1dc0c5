#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace raolab {

/// Element of a prime field, stored as its canonical representative in [0, p).
using Fp = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 32003;
inline constexpr std::uint32_t kSecondPrime = 65537;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

/// Arithmetic in Z/pZ. The modulus must be prime and below 2^31 so that
/// products of two representatives fit in 64 bits.
class FieldSpec {
 public:
  FieldSpec() : p_(kDefaultPrime) {}
  explicit FieldSpec(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p)) {
      throw FieldError("modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
  }

  std::uint32_t p() const { return p_; }

  Fp add(Fp a, Fp b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Fp sub(Fp a, Fp b) const { return a >= b ? a - b : a + p_ - b; }
  Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }
  Fp mul(Fp a, Fp b) const {
    return static_cast<Fp>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Fp pow(Fp a, std::uint64_t e) const {
    std::uint64_t r = 1, b = a % p_;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<Fp>(r);
  }
  Fp inv(Fp a) const {
    if (a == 0) throw FieldError("inverse of zero");
    return pow(a, p_ - 2);
  }
  Fp from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Fp>(r);
  }
  /// Symmetric lift to (-p/2, p/2], used when printing.
  std::int64_t lift(Fp a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace raolab
