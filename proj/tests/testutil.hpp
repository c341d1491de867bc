#ifndef BETTIPOW_TESTS_TESTUTIL_HPP
#define BETTIPOW_TESTS_TESTUTIL_HPP

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bettipow/ideal_format.hpp"
#include "bettipow/monomial_ideal.hpp"
#include "bettipow/simplicial_complex.hpp"

namespace bettipow::testutil {

inline std::string dataPath(const std::string& rel) {
  return std::string(BETTIPOW_TEST_DATA_DIR) + "/" + rel;
}

inline std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline MonomialIdeal loadIdeal(const std::string& fixture) {
  return parseIdealFile(dataPath("fixtures/" + fixture)).ideal;
}

/// The nine-variable squarefree cubic demo ideal used across the suite.
inline MonomialIdeal stabdemoIdeal() { return loadIdeal("stabdemo.ideal"); }

inline MonomialIdeal sturmfelsIdeal() { return loadIdeal("sturmfels.ideal"); }

inline MonomialIdeal xyIdeal() {
  return MonomialIdeal(2, {"x", "y"},
                       {Monomial::variable(2, 0), Monomial::variable(2, 1)});
}

inline Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }

/// Independent oracle for the upper Koszul complex: enumerate every
/// squarefree sigma under b and test membership of x^b / x^sigma directly
/// against the generator list.
inline SimplicialComplex bruteForceUpperKoszul(const MonomialIdeal& I,
                                               const Monomial& b) {
  const int N = I.ringDim();
  std::vector<int> supp;
  for (int v = 0; v < N; ++v)
    if (b.exponent(v) >= 1) supp.push_back(v);
  std::set<std::vector<int>> faces;
  const int s = static_cast<int>(supp.size());
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    std::vector<Exponent> rest(b.exponents());
    std::vector<int> sigma;
    for (int t = 0; t < s; ++t)
      if (mask & (1u << t)) {
        sigma.push_back(supp[static_cast<std::size_t>(t)]);
        --rest[static_cast<std::size_t>(supp[static_cast<std::size_t>(t)])];
      }
    const Monomial quotient(rest);
    bool inIdeal = false;
    for (const Monomial& g : I.generators())
      if (divides(g, quotient)) {
        inIdeal = true;
        break;
      }
    if (inIdeal) faces.insert(sigma);
  }
  if (faces.empty()) return SimplicialComplex::voidComplex(N);
  return SimplicialComplex::fromClosedFaceSet(N, std::move(faces));
}

/// Independent oracle for the square-covering index: plain enumeration of
/// generator multisets of size n for n = 1..nMax, no pruning.
inline std::optional<int> exhaustiveSquareCover(const MonomialIdeal& I, int nMax) {
  const auto& gens = I.generators();
  const int N = I.ringDim();
  std::vector<std::int64_t> total(static_cast<std::size_t>(N), 0);
  auto search = [&](auto&& self, std::size_t from, int left) -> bool {
    if (left == 0) {
      for (std::int64_t v : total)
        if (v < 2) return false;
      return true;
    }
    for (std::size_t g = from; g < gens.size(); ++g) {
      for (int v = 0; v < N; ++v) total[static_cast<std::size_t>(v)] += gens[g].exponent(v);
      if (self(self, g, left - 1)) {
        for (int v = 0; v < N; ++v) total[static_cast<std::size_t>(v)] -= gens[g].exponent(v);
        return true;
      }
      for (int v = 0; v < N; ++v) total[static_cast<std::size_t>(v)] -= gens[g].exponent(v);
    }
    return false;
  };
  for (int n = 1; n <= nMax; ++n)
    if (search(search, 0, n)) return n;
  return std::nullopt;
}

}  // namespace bettipow::testutil

#endif
