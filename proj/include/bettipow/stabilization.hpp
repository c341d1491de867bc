#ifndef BETTIPOW_STABILIZATION_HPP
#define BETTIPOW_STABILIZATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "bettipow/betti_tables.hpp"
#include "bettipow/monomial_ideal.hpp"
#include "bettipow/shape.hpp"

namespace bettipow {

/// Eventual linear behaviour of reg(I^d): reg = slope*d + intercept for
/// d >= onset, read off the longest trailing window (>= 3 points) with
/// constant first differences.
struct RegularityFit {
  std::int64_t slope = 0;
  std::int64_t intercept = 0;
  int onset = 0;
};

/// Whether a normalized table position is occupied on one contiguous
/// interval of powers, as the per-position support conjecture expects.
struct UnimodalityFinding {
  int i = 0;
  std::int64_t jNorm = 0;
  int firstPower = 0;
  int lastPower = 0;   // clamped at the horizon
  bool contiguous = true;
  std::optional<int> gapWitness;  // a power strictly inside [first,last] missing the position
  bool openAtHorizon = false;     // lastPower == horizon, so the true end is unknown
};

struct StabilizationReport {
  std::string idealId;
  std::int64_t r = 0;
  int horizon = 0;  // requested dMax
  /// Per-power data for d = 1..lastCompletedPower (index d-1).
  std::vector<GradedBettiTable> tables;
  std::vector<ShapeSet> shapes;
  std::vector<std::int64_t> regularitySequence;
  /// Smallest D with shape(d) = shape(D) for all D <= d <= lastCompleted.
  std::optional<int> empiricalStab;
  /// The report never claims the true stabilization index.
  std::string certainty = "empirical up to horizon";
  std::optional<RegularityFit> regularityFit;
  std::vector<UnimodalityFinding> unimodality;
  bool partial = false;
  int lastCompletedPower = 0;
};

struct ScanOptions {
  int threads = 0;  // 0 = hardware default
  /// Abort (marking the report partial) when the lcm closure at some power
  /// exceeds this many multidegrees; 0 = unlimited.
  std::size_t maxLatticePoints = 0;
};

/// Tables, shapes, empirical stabilization index, regularity fit and
/// unimodality findings for I^1..I^dMax. Deterministic for fixed inputs,
/// independent of the thread schedule.
StabilizationReport stabilizationScan(const MonomialIdeal& I, int dMax,
                                      const FieldConfig& F,
                                      const ScanOptions& options = {});

/// Contiguity test for every normalized position occurring in any shape of
/// the report, in canonical position order.
std::vector<UnimodalityFinding> unimodalityCheck(const StabilizationReport& report);

}  // namespace bettipow

#endif
