#include "bettipow/rees_bound.hpp"

#include <set>
#include <string>

#include "bettipow/koszul.hpp"

namespace bettipow {

void ReesBettiData::validate() const {
  if (k < 0) throw PreconditionError("ReesBettiData: k must be >= 0");
  if (r < 1) throw PreconditionError("ReesBettiData: r must be >= 1");
  for (const auto& [key, rank] : beta) {
    const auto& [i, j, m] = key;
    if (i < 0 || j < 0 || m < 0)
      throw PreconditionError("ReesBettiData: negative index in key");
    if (rank <= 0) throw PreconditionError("ReesBettiData: ranks must be positive");
  }
  const auto origin = beta.find({0, 0, 0});
  if (origin != beta.end() && origin->second != 1)
    throw PreconditionError(
        "ReesBettiData: the bidegree-(0,0) generator must have rank 1");
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (std::int64_t t = 1; t <= k; ++t) {
    // result * (n - k + t) / t is exact at every step.
    std::int64_t numerator;
    if (__builtin_mul_overflow(result, n - k + t, &numerator))
      throw OverflowError("binomial(" + std::to_string(n) + ", " +
                          std::to_string(k) + ") overflows 64 bits");
    result = numerator / t;
  }
  return result;
}

BoundCheckResult reesBoundCheck(const MonomialIdeal& I, int d,
                                const ReesBettiData& data,
                                const FieldConfig& F) {
  if (d < 1) throw PreconditionError("reesBoundCheck: power must be >= 1");
  data.validate();
  const std::int64_t r = equigeneratedDegree(I);
  if (data.r != r)
    throw PreconditionError("reesBoundCheck: data declares r=" +
                            std::to_string(data.r) + " but the ideal is " +
                            "equigenerated in degree " + std::to_string(r));
  if (data.k + 1 != I.generatorCount())
    throw PreconditionError("reesBoundCheck: data declares k=" +
                            std::to_string(data.k) + " but the ideal has " +
                            std::to_string(I.generatorCount()) +
                            " minimal generators");

  const GradedBettiTable actual = gradedBetti(power(I, d), F);

  // Every (i, j) with either side nonzero.
  std::set<std::pair<int, std::int64_t>> keys;
  for (const auto& [key, rank] : actual.entries)
    keys.insert({key.first, key.second - r * d});
  for (const auto& [key, rank] : data.beta) {
    const auto& [i, j, m] = key;
    if (m <= d) keys.insert({i, j});
  }

  BoundCheckResult result;
  result.d = d;
  for (const auto& [i, j] : keys) {
    BoundEntry e;
    e.i = i;
    e.j = j;
    e.actual = actual.at(i, j + r * d);
    e.bound = 0;
    for (std::int64_t m = 0; m <= d; ++m) {
      const auto it = data.beta.find({i, j, m});
      if (it == data.beta.end()) continue;
      const std::int64_t coeff = binomial(d + data.k - m, d - m);
      std::int64_t term, sum;
      if (__builtin_mul_overflow(coeff, it->second, &term) ||
          __builtin_add_overflow(e.bound, term, &sum))
        throw OverflowError("reesBoundCheck: bound exceeds 64 bits");
      e.bound = sum;
    }
    e.slack = e.bound - e.actual;
    result.entries.push_back(e);
    if (e.slack < 0) result.violations.push_back(e);
  }
  return result;
}

}  // namespace bettipow
