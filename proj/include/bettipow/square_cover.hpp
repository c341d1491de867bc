#ifndef BETTIPOW_SQUARE_COVER_HPP
#define BETTIPOW_SQUARE_COVER_HPP

#include <optional>
#include <string>

#include "bettipow/monomial_ideal.hpp"
#include "bettipow/prime_field.hpp"
#include "bettipow/stabilization.hpp"

namespace bettipow {

/// Least n <= nMax such that some multiset of n generators multiplies to a
/// monomial with every variable exponent >= 2, found by branch and bound
/// with the componentwise-coverage lower bound for pruning. Requires a
/// squarefree ideal whose generators touch every variable; nMax defaults
/// to 2N, which is always sufficient under those hypotheses. Returns
/// nullopt when no n <= nMax works (possible only for a custom nMax).
std::optional<int> squareCoverIndex(const MonomialIdeal& I, int nMax = 0);

enum class StabVerdict {
  kConsistentSoFar,
  kInconsistentAtHorizon,
  kInconclusive,
};

std::string toString(StabVerdict v);

/// Square-covering formula value versus the empirically observed
/// stabilization index at a finite horizon. The verdict is three-valued:
/// a finite horizon can refute the formula (a shape change after the
/// formula's value) but can never confirm it.
struct StabComparisonRecord {
  std::optional<int> squareCover;
  int nMaxUsed = 0;
  std::optional<int> empiricalStab;
  int horizon = 0;
  StabVerdict verdict = StabVerdict::kInconclusive;
  StabilizationReport scan;
};

StabComparisonRecord conjectureStabCompare(const MonomialIdeal& I, int dMax,
                                           const FieldConfig& F,
                                           int nMax = 0,
                                           const ScanOptions& options = {});

}  // namespace bettipow

#endif
