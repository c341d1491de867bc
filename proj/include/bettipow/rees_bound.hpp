#ifndef BETTIPOW_REES_BOUND_HPP
#define BETTIPOW_REES_BOUND_HPP

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "bettipow/monomial_ideal.hpp"
#include "bettipow/prime_field.hpp"

namespace bettipow {

/// Ingested bigraded Betti numbers beta_{i,(j,m)} of the Rees algebra of an
/// ideal with k+1 generators equigenerated in degree r. The x-degree j is
/// normalized so that j pairs with ideal degree j + r*d. These are produced
/// externally; this artifact only consumes them.
struct ReesBettiData {
  std::int64_t k = 0;
  std::int64_t r = 0;
  /// (i, j, m) -> rank > 0.
  std::map<std::tuple<int, std::int64_t, std::int64_t>, std::int64_t> beta;

  /// Enforces key ranges and the bidegree-(0,0) generator convention.
  void validate() const;
};

struct BoundEntry {
  int i = 0;
  std::int64_t j = 0;       // normalized x-degree
  std::int64_t actual = 0;  // beta_{i, j + r*d}(I^d)
  std::int64_t bound = 0;   // sum_m C(d+k-m, d-m) * beta_{i,(j,m)}
  std::int64_t slack = 0;   // bound - actual; negative only on bad input data
};

struct BoundCheckResult {
  int d = 0;
  std::vector<BoundEntry> entries;     // every (i, j) with either side nonzero
  std::vector<BoundEntry> violations;  // entries with slack < 0
  bool passed() const { return violations.empty(); }
};

/// Exact binomial coefficient; throws OverflowError instead of wrapping.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Compares the engine-computed Betti table of I^d against the strand bound
/// derived from the ingested Rees resolution data. A violation signals bad
/// ingested data and is reported in the result, not thrown. Mismatched k/r
/// input contracts do throw.
BoundCheckResult reesBoundCheck(const MonomialIdeal& I, int d,
                                const ReesBettiData& data,
                                const FieldConfig& F);

}  // namespace bettipow

#endif
