#include "bettipow/stabilization.hpp"

#include <algorithm>
#include <map>

#include "bettipow/koszul.hpp"

namespace bettipow {

namespace {

std::optional<RegularityFit> fitTrailingLinear(
    const std::vector<std::int64_t>& regs) {
  if (regs.size() < 3) return std::nullopt;
  const std::size_t n = regs.size();
  const std::int64_t lastDiff = regs[n - 1] - regs[n - 2];
  std::size_t start = n - 2;  // window [start .. n-1], 0-based
  while (start > 0 && regs[start] - regs[start - 1] == lastDiff) --start;
  const std::size_t points = n - start;
  if (points < 3) return std::nullopt;
  RegularityFit fit;
  fit.slope = lastDiff;
  fit.intercept = regs[n - 1] - lastDiff * static_cast<std::int64_t>(n);
  fit.onset = static_cast<int>(start) + 1;  // powers are 1-based
  return fit;
}

}  // namespace

std::vector<UnimodalityFinding> unimodalityCheck(const StabilizationReport& report) {
  std::map<std::pair<int, std::int64_t>, std::vector<int>> occurrences;
  for (std::size_t k = 0; k < report.shapes.size(); ++k)
    for (const auto& pos : report.shapes[k].positions)
      occurrences[pos].push_back(static_cast<int>(k) + 1);

  std::vector<UnimodalityFinding> findings;
  for (const auto& [pos, powers] : occurrences) {
    UnimodalityFinding f;
    f.i = pos.first;
    f.jNorm = pos.second;
    f.firstPower = powers.front();
    f.lastPower = powers.back();
    f.openAtHorizon = f.lastPower == report.lastCompletedPower;
    f.contiguous =
        powers.back() - powers.front() + 1 == static_cast<int>(powers.size());
    if (!f.contiguous) {
      for (std::size_t k = 0; k + 1 < powers.size(); ++k)
        if (powers[k + 1] != powers[k] + 1) {
          f.gapWitness = powers[k] + 1;
          break;
        }
    }
    findings.push_back(f);
  }
  return findings;
}

StabilizationReport stabilizationScan(const MonomialIdeal& I, int dMax,
                                      const FieldConfig& F,
                                      const ScanOptions& options) {
  if (dMax < 2) throw PreconditionError("stabilizationScan: horizon must be >= 2");
  const std::int64_t r = equigeneratedDegree(I);

  StabilizationReport report;
  report.idealId = I.describe();
  report.r = r;
  report.horizon = dMax;

  MonomialIdeal Id = I;
  for (int d = 1; d <= dMax; ++d) {
    if (d > 1) Id = product(Id, I);  // extend the running power
    if (options.maxLatticePoints != 0 &&
        lcmClosure(Id).size() > options.maxLatticePoints) {
      report.partial = true;
      break;
    }
    GradedBettiTable T = gradedBetti(Id, F, options.threads);
    report.shapes.push_back(shapeOf(T, r, d));
    report.regularitySequence.push_back(regularity(T));
    report.tables.push_back(std::move(T));
    report.lastCompletedPower = d;
  }

  if (report.lastCompletedPower >= 1) {
    int stab = report.lastCompletedPower;
    while (stab > 1 &&
           report.shapes[static_cast<std::size_t>(stab) - 2].samePositions(
               report.shapes[static_cast<std::size_t>(stab) - 1]))
      --stab;
    report.empiricalStab = stab;
    report.regularityFit = fitTrailingLinear(report.regularitySequence);
    report.unimodality = unimodalityCheck(report);
  }
  return report;
}

}  // namespace bettipow
