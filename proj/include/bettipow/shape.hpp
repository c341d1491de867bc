#ifndef BETTIPOW_SHAPE_HPP
#define BETTIPOW_SHAPE_HPP

#include <cstdint>
#include <set>
#include <utility>

#include "bettipow/betti_tables.hpp"

namespace bettipow {

/// Degree-normalized support of a Betti table: pairs (i, j - r*d) over the
/// nonzero entries of the table of the d-th power of an ideal equigenerated
/// in degree r. Shapes of different powers compare directly.
struct ShapeSet {
  std::set<std::pair<int, std::int64_t>> positions;
  std::int64_t r = 0;
  int d = 0;

  bool samePositions(const ShapeSet& o) const { return positions == o.positions; }
};

/// Normalizes the support of T, the table of I^d for an ideal equigenerated
/// in degree r. A position with j - r*d < i means (T, r, d) are inconsistent
/// and raises PreconditionError.
ShapeSet shapeOf(const GradedBettiTable& T, std::int64_t r, int d);

}  // namespace bettipow

#endif
