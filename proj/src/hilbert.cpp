#include "bettipow/hilbert.hpp"

#include <algorithm>

#include "bettipow/koszul.hpp"

namespace bettipow {

void IntPolynomial::addTerm(std::int64_t coeff, std::size_t exponent) {
  if (coeff == 0) return;
  if (coeffs_.size() <= exponent) coeffs_.resize(exponent + 1, 0);
  coeffs_[exponent] += coeff;
  trim();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<std::int64_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = coefficient(k) + o.coefficient(k);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<std::int64_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = coefficient(k) - o.coefficient(k);
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::toString() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || k == 0) out += std::to_string(a);
    if (k >= 1) out += "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

HilbertNumerator hilbertNumerator(const MonomialIdeal& I,
                                  const HilbertNumeratorOptions& opts) {
  const int g = I.generatorCount();
  if (g > opts.inclusionExclusionCutoff) {
    if (!opts.permitFallback)
      throw PreconditionError(
          "hilbertNumerator: generator count " + std::to_string(g) +
          " exceeds the inclusion-exclusion cutoff " +
          std::to_string(opts.inclusionExclusionCutoff) +
          " and fallback is not permitted");
    const GradedBettiTable T =
        gradedBetti(I, FieldConfig(opts.fallbackCharacteristic));
    return {numeratorFromBettiTable(T), false};
  }

  IntPolynomial poly;
  const auto& gens = I.generators();
  // DFS over subsets, carrying the running lcm and parity.
  Monomial current = Monomial::unit(I.ringDim());
  auto walk = [&](auto&& self, std::size_t next, const Monomial& lcmSoFar,
                  int sign) -> void {
    poly.addTerm(sign, static_cast<std::size_t>(lcmSoFar.totalDegree()));
    for (std::size_t k = next; k < gens.size(); ++k)
      self(self, k + 1, lcmOf(lcmSoFar, gens[k]), -sign);
  };
  walk(walk, 0, current, 1);
  return {poly, true};
}

IntPolynomial numeratorFromBettiTable(const GradedBettiTable& T) {
  IntPolynomial poly = IntPolynomial::one();
  for (const auto& [key, rank] : T.entries) {
    const int i = key.first;
    const std::int64_t j = key.second;
    poly.addTerm(i % 2 == 0 ? -rank : rank, static_cast<std::size_t>(j));
  }
  return poly;
}

}  // namespace bettipow
