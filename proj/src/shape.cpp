#include "bettipow/shape.hpp"

#include <string>

#include "bettipow/errors.hpp"

namespace bettipow {

ShapeSet shapeOf(const GradedBettiTable& T, std::int64_t r, int d) {
  ShapeSet s;
  s.r = r;
  s.d = d;
  for (const auto& [key, rank] : T.entries) {
    const int i = key.first;
    const std::int64_t jNorm = key.second - r * d;
    if (jNorm < i)
      throw PreconditionError(
          "shapeOf: entry (" + std::to_string(i) + ", " +
          std::to_string(key.second) + ") normalizes below the diagonal; " +
          "table does not belong to a power-" + std::to_string(d) +
          " ideal equigenerated in degree " + std::to_string(r));
    s.positions.insert({i, jNorm});
  }
  return s;
}

}  // namespace bettipow
