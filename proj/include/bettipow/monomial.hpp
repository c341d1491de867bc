#ifndef BETTIPOW_MONOMIAL_HPP
#define BETTIPOW_MONOMIAL_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "bettipow/errors.hpp"

namespace bettipow {

using Exponent = std::int32_t;

/// A monomial in a fixed polynomial ring, stored as its exponent vector.
/// Immutable after construction; all arithmetic is range-checked.
class Monomial {
public:
  explicit Monomial(std::vector<Exponent> exponents)
      : exps_(std::move(exponents)) {
    for (Exponent e : exps_)
      if (e < 0) throw PreconditionError("monomial exponents must be nonnegative");
  }

  static Monomial unit(int ringDim) {
    return Monomial(std::vector<Exponent>(static_cast<std::size_t>(ringDim), 0));
  }

  static Monomial variable(int ringDim, int var, Exponent power = 1) {
    std::vector<Exponent> e(static_cast<std::size_t>(ringDim), 0);
    e.at(static_cast<std::size_t>(var)) = power;
    return Monomial(std::move(e));
  }

  int ringDim() const { return static_cast<int>(exps_.size()); }

  Exponent exponent(int var) const {
    return exps_[static_cast<std::size_t>(var)];
  }

  const std::vector<Exponent>& exponents() const { return exps_; }

  std::int64_t totalDegree() const {
    std::int64_t d = 0;
    for (Exponent e : exps_) d += e;
    return d;
  }

  bool isUnit() const {
    for (Exponent e : exps_)
      if (e != 0) return false;
    return true;
  }

  bool isSquarefree() const {
    for (Exponent e : exps_)
      if (e > 1) return false;
    return true;
  }

  /// Variables with nonzero exponent.
  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < ringDim(); ++i)
      if (exps_[static_cast<std::size_t>(i)] > 0) s.push_back(i);
    return s;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

  /// Graded lexicographic: lower total degree first; within a degree the
  /// lexicographically larger exponent vector comes first, so generator
  /// lists read x^2, xy, y^2.
  bool operator<(const Monomial& o) const {
    const std::int64_t da = totalDegree(), db = o.totalDegree();
    if (da != db) return da < db;
    return exps_ > o.exps_;
  }

private:
  std::vector<Exponent> exps_;
};

inline void requireSameDim(const Monomial& a, const Monomial& b,
                           const char* op) {
  if (a.ringDim() != b.ringDim())
    throw DimensionError(std::string(op) + ": ring dimensions differ (" +
                         std::to_string(a.ringDim()) + " vs " +
                         std::to_string(b.ringDim()) + ")");
}

/// Componentwise <= test.
inline bool divides(const Monomial& a, const Monomial& b) {
  requireSameDim(a, b, "divides");
  for (int i = 0; i < a.ringDim(); ++i)
    if (a.exponent(i) > b.exponent(i)) return false;
  return true;
}

/// Componentwise max.
inline Monomial lcmOf(const Monomial& a, const Monomial& b) {
  requireSameDim(a, b, "lcmOf");
  std::vector<Exponent> e(static_cast<std::size_t>(a.ringDim()));
  for (int i = 0; i < a.ringDim(); ++i)
    e[static_cast<std::size_t>(i)] = std::max(a.exponent(i), b.exponent(i));
  return Monomial(std::move(e));
}

/// Componentwise sum with overflow checking.
inline Monomial times(const Monomial& a, const Monomial& b) {
  requireSameDim(a, b, "times");
  std::vector<Exponent> e(static_cast<std::size_t>(a.ringDim()));
  for (int i = 0; i < a.ringDim(); ++i) {
    const std::int64_t s =
        static_cast<std::int64_t>(a.exponent(i)) + b.exponent(i);
    if (s > std::numeric_limits<Exponent>::max())
      throw OverflowError("times: exponent overflow at variable index " +
                          std::to_string(i));
    e[static_cast<std::size_t>(i)] = static_cast<Exponent>(s);
  }
  return Monomial(std::move(e));
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    // FNV-1a over the exponent bytes.
    std::uint64_t h = 1469598103934665603ull;
    for (Exponent e : m.exponents()) {
      std::uint64_t v = static_cast<std::uint32_t>(e);
      for (int k = 0; k < 4; ++k) {
        h ^= (v >> (8 * k)) & 0xff;
        h *= 1099511628211ull;
      }
    }
    return static_cast<std::size_t>(h);
  }
};

/// Renders x1^2*x3 style using the supplied variable names.
std::string toString(const Monomial& m, const std::vector<std::string>& varNames);

}  // namespace bettipow

#endif
