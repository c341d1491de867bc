#ifndef BETTIPOW_PRIME_FIELD_HPP
#define BETTIPOW_PRIME_FIELD_HPP

#include <cstdint>
#include <string>

#include "bettipow/errors.hpp"

namespace bettipow {

/// Coefficient field for homology: Z/p for a prime p < 2^31 so that
/// products stay inside int64. Defaults to 32003.
class FieldConfig {
public:
  static constexpr std::int64_t kDefaultCharacteristic = 32003;

  explicit FieldConfig(std::int64_t characteristic = kDefaultCharacteristic)
      : p_(characteristic) {
    if (p_ < 2 || !isPrime(p_))
      throw PreconditionError("field characteristic must be a prime >= 2, got " +
                              std::to_string(p_));
    if (p_ > (std::int64_t(1) << 31))
      throw PreconditionError("field characteristic too large (max 2^31)");
  }

  std::int64_t characteristic() const { return p_; }

  std::int64_t reduce(std::int64_t x) const {
    std::int64_t r = x % p_;
    return r < 0 ? r + p_ : r;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % p_; }
  std::int64_t sub(std::int64_t a, std::int64_t b) const {
    std::int64_t r = a - b;
    return r < 0 ? r + p_ : r;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return a * b % p_; }
  std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }

  std::int64_t inv(std::int64_t a) const {
    // Extended Euclid; a must be nonzero mod p.
    std::int64_t t = 0, newt = 1, r = p_, newr = a % p_;
    while (newr != 0) {
      const std::int64_t q = r / newr;
      t -= q * newt;
      std::swap(t, newt);
      r -= q * newr;
      std::swap(r, newr);
    }
    if (r != 1) throw PreconditionError("inverse of zero requested");
    return t < 0 ? t + p_ : t;
  }

  bool operator==(const FieldConfig& o) const { return p_ == o.p_; }

  static bool isPrime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

private:
  std::int64_t p_;
};

}  // namespace bettipow

#endif
