#ifndef BETTIPOW_HILBERT_HPP
#define BETTIPOW_HILBERT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bettipow/betti_tables.hpp"
#include "bettipow/monomial_ideal.hpp"

namespace bettipow {

/// Dense integer polynomial in one variable t; coefficient of t^k at
/// index k, trailing zeros trimmed.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coeffs)
      : coeffs_(std::move(coeffs)) {
    trim();
  }

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return IntPolynomial({1}); }

  std::int64_t coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : 0;
  }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.empty(); }

  void addTerm(std::int64_t coeff, std::size_t exponent);

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const IntPolynomial& o) const { return coeffs_ != o.coeffs_; }

  /// "1 - 5t^3 + 6t^5" style.
  std::string toString() const;

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<std::int64_t> coeffs_;
};

struct HilbertNumeratorOptions {
  /// Generator counts above this switch to the Betti-table fallback.
  int inclusionExclusionCutoff = 25;
  bool permitFallback = true;
  /// Field used only by the fallback route.
  std::int64_t fallbackCharacteristic = FieldConfig::kDefaultCharacteristic;
};

struct HilbertNumerator {
  IntPolynomial poly;
  /// False when the value came from the Betti-table fallback and therefore
  /// cannot serve as an independent conservation oracle.
  bool independent = true;
};

/// Numerator of the Hilbert series of R/I: sum over generator subsets S of
/// (-1)^|S| t^{deg lcm(S)}. Above the cutoff the value is derived from the
/// graded Betti table instead (flagged non-independent), or refused when
/// fallback is not permitted.
HilbertNumerator hilbertNumerator(const MonomialIdeal& I,
                                  const HilbertNumeratorOptions& opts = {});

/// 1 - sum_{i,j} (-1)^i beta_{i,j} t^j, the quantity conservation compares
/// against the inclusion-exclusion numerator.
IntPolynomial numeratorFromBettiTable(const GradedBettiTable& T);

}  // namespace bettipow

#endif
