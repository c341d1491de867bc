#include "bettipow/square_cover.hpp"

#include <algorithm>

namespace bettipow {

namespace {

/// Can `slots` more generators (from index `from` on) close the residual
/// demand? Depth-first over per-generator copy counts. Pruning uses the
/// componentwise bound: each generator adds at most 1 per variable, so a
/// residual entry larger than the remaining slots is hopeless.
bool coverSearch(const std::vector<Monomial>& gens, std::size_t from,
                 std::vector<int>& residual, int slots) {
  int worst = 0, total = 0;
  for (int v : residual) {
    worst = std::max(worst, v);
    total += v;
  }
  if (total == 0) return true;
  if (worst > slots) return false;
  if (from == gens.size()) return false;

  const auto& g = gens[from];
  // More copies of g than its largest residual never help.
  const int maxCopies = std::min(slots, worst);
  for (int copies = maxCopies; copies >= 0; --copies) {
    std::vector<int> next = residual;
    for (int v = 0; v < g.ringDim(); ++v)
      if (g.exponent(v) > 0)
        next[static_cast<std::size_t>(v)] =
            std::max(0, next[static_cast<std::size_t>(v)] - copies);
    if (coverSearch(gens, from + 1, next, slots - copies)) return true;
  }
  return false;
}

}  // namespace

std::optional<int> squareCoverIndex(const MonomialIdeal& I, int nMax) {
  if (!I.isSquarefree())
    throw PreconditionError("squareCoverIndex: ideal is not squarefree");
  if (!I.hasFullSupport())
    throw PreconditionError(
        "squareCoverIndex: generators do not touch every variable");
  const int N = I.ringDim();
  if (nMax <= 0) nMax = 2 * N;

  // Feasibility is monotone in n (extra copies never hurt), so scan n
  // upward from the coverage lower bound.
  std::int64_t maxGenDegree = 0;
  for (const auto& g : I.generators())
    maxGenDegree = std::max(maxGenDegree, g.totalDegree());
  const int lower = std::max<std::int64_t>(
      2, (2 * N + maxGenDegree - 1) / maxGenDegree);

  for (int n = lower; n <= nMax; ++n) {
    std::vector<int> demand(static_cast<std::size_t>(N), 2);
    if (coverSearch(I.generators(), 0, demand, n)) return n;
  }
  return std::nullopt;
}

std::string toString(StabVerdict v) {
  switch (v) {
    case StabVerdict::kConsistentSoFar: return "consistent-so-far";
    case StabVerdict::kInconsistentAtHorizon: return "inconsistent-at-horizon";
    case StabVerdict::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

StabComparisonRecord conjectureStabCompare(const MonomialIdeal& I, int dMax,
                                           const FieldConfig& F, int nMax,
                                           const ScanOptions& options) {
  StabComparisonRecord rec;
  rec.nMaxUsed = nMax <= 0 ? 2 * I.ringDim() : nMax;
  rec.squareCover = squareCoverIndex(I, nMax);
  rec.scan = stabilizationScan(I, dMax, F, options);
  rec.horizon = rec.scan.lastCompletedPower;
  rec.empiricalStab = rec.scan.empiricalStab;

  // A shape change strictly after the formula's value refutes it inside the
  // horizon; exact agreement is consistent so far; anything else (formula
  // beyond the horizon, or shapes settling earlier than the formula) cannot
  // be decided at a finite horizon.
  if (rec.squareCover && rec.empiricalStab) {
    if (*rec.empiricalStab > *rec.squareCover)
      rec.verdict = StabVerdict::kInconsistentAtHorizon;
    else if (*rec.empiricalStab == *rec.squareCover)
      rec.verdict = StabVerdict::kConsistentSoFar;
    else
      rec.verdict = StabVerdict::kInconclusive;
  }
  return rec;
}

}  // namespace bettipow
