#ifndef BETTIPOW_MONOMIAL_IDEAL_HPP
#define BETTIPOW_MONOMIAL_IDEAL_HPP

#include <string>
#include <vector>

#include "bettipow/monomial.hpp"

namespace bettipow {

/// A proper nonzero monomial ideal, held by its minimal generating set in
/// canonical (graded lexicographic) order. Construction rejects the zero
/// and unit ideals and enforces minimality, so downstream code can rely on
/// generator counts being the actual beta_0 data.
class MonomialIdeal {
public:
  /// Builds the ideal generated by `gens`, discarding non-minimal
  /// generators and duplicates. Throws ZeroIdealError / UnitIdealError /
  /// DimensionError on malformed input.
  MonomialIdeal(int ringDim, std::vector<std::string> varNames,
                std::vector<Monomial> gens);

  int ringDim() const { return ringDim_; }
  const std::vector<std::string>& varNames() const { return varNames_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  int generatorCount() const { return static_cast<int>(gens_.size()); }

  bool isSquarefree() const;

  /// True when every ring variable appears in some generator.
  bool hasFullSupport() const;

  bool operator==(const MonomialIdeal& o) const {
    return ringDim_ == o.ringDim_ && gens_ == o.gens_;
  }

  /// "(x1*x2, x3^2)" — deterministic, used as an identifier in reports.
  std::string describe() const;

private:
  int ringDim_;
  std::vector<std::string> varNames_;
  std::vector<Monomial> gens_;
};

/// Default variable names x1..xN.
std::vector<std::string> defaultVarNames(int ringDim);

/// The ideal with the divisibility-minimal subset of `gens`, canonically
/// ordered. Idempotent and independent of the input order.
MonomialIdeal minimalize(const std::vector<Monomial>& gens, int ringDim,
                         std::vector<std::string> varNames = {});

/// Whether minimalize() would drop anything (duplicates or divisible gens).
bool hasRedundantGenerators(const std::vector<Monomial>& gens);

/// Minimalized product ideal I*J.
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);

/// The d-th power, d >= 1, computed by repeated products with
/// minimalization at every step.
MonomialIdeal power(const MonomialIdeal& I, int d);

/// The common total degree r of the minimal generators. Throws
/// NotEquigeneratedError (carrying the degree multiset) on mixed degrees.
std::int64_t equigeneratedDegree(const MonomialIdeal& I);

}  // namespace bettipow

#endif
