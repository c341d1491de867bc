#include "bettipow/monomial_ideal.hpp"

#include <algorithm>
#include <unordered_set>

namespace bettipow {

namespace {

std::vector<Monomial> minimalGenerators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // After the graded sort, any proper divisor of g precedes g.
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& h : kept)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

}  // namespace

std::vector<std::string> defaultVarNames(int ringDim) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(ringDim));
  for (int i = 1; i <= ringDim; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

MonomialIdeal::MonomialIdeal(int ringDim, std::vector<std::string> varNames,
                             std::vector<Monomial> gens)
    : ringDim_(ringDim), varNames_(std::move(varNames)) {
  if (ringDim_ <= 0) throw DimensionError("ring dimension must be positive");
  if (varNames_.empty()) varNames_ = defaultVarNames(ringDim_);
  if (static_cast<int>(varNames_.size()) != ringDim_)
    throw DimensionError("variable name list has wrong length");
  {
    std::unordered_set<std::string> seen;
    for (const std::string& v : varNames_)
      if (!seen.insert(v).second)
        throw PreconditionError("duplicate variable name '" + v + "'");
  }
  if (gens.empty()) throw ZeroIdealError("zero ideal: empty generating set");
  for (const Monomial& g : gens) {
    if (g.ringDim() != ringDim_)
      throw DimensionError("generator has wrong ring dimension");
    if (g.isUnit()) throw UnitIdealError("unit ideal: generator 1 present");
  }
  gens_ = minimalGenerators(std::move(gens));
}

bool MonomialIdeal::isSquarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.isSquarefree(); });
}

bool MonomialIdeal::hasFullSupport() const {
  std::vector<bool> seen(static_cast<std::size_t>(ringDim_), false);
  for (const Monomial& g : gens_)
    for (int v : g.support()) seen[static_cast<std::size_t>(v)] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string MonomialIdeal::describe() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += toString(gens_[i], varNames_);
  }
  return out + ")";
}

MonomialIdeal minimalize(const std::vector<Monomial>& gens, int ringDim,
                         std::vector<std::string> varNames) {
  return MonomialIdeal(ringDim, std::move(varNames), gens);
}

bool hasRedundantGenerators(const std::vector<Monomial>& gens) {
  if (gens.empty()) return false;
  std::vector<Monomial> minimal = minimalGenerators(gens);
  std::vector<Monomial> sorted = gens;
  std::sort(sorted.begin(), sorted.end());
  return minimal != sorted;
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ringDim() != J.ringDim())
    throw DimensionError("product: ring dimensions differ");
  std::unordered_set<Monomial, MonomialHash> products;
  for (const Monomial& a : I.generators())
    for (const Monomial& b : J.generators()) products.insert(times(a, b));
  return minimalize(std::vector<Monomial>(products.begin(), products.end()),
                    I.ringDim(), I.varNames());
}

MonomialIdeal power(const MonomialIdeal& I, int d) {
  if (d < 1) throw PreconditionError("power: exponent must be >= 1");
  MonomialIdeal result = I;
  for (int step = 2; step <= d; ++step) result = product(result, I);
  return result;
}

std::int64_t equigeneratedDegree(const MonomialIdeal& I) {
  std::vector<long long> degrees;
  degrees.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) degrees.push_back(g.totalDegree());
  for (long long deg : degrees)
    if (deg != degrees.front())
      throw NotEquigeneratedError("not equigenerated", degrees);
  return degrees.front();
}

}  // namespace bettipow
