#include "bettipow/lcm_lattice.hpp"

#include <algorithm>
#include <set>

#include "bettipow/koszul.hpp"
#include "bettipow/simplicial_complex.hpp"

namespace bettipow {

namespace {

/// Order complex of a poset given by its strict-below lists: one vertex per
/// element, one face per chain. The chain family is subset-closed, and the
/// DFS below emits every nonempty chain exactly once, so the face set can
/// be adopted directly. An empty poset yields the irrelevant complex.
SimplicialComplex orderComplex(const std::vector<std::vector<int>>& strictlyBelow) {
  const int n = static_cast<int>(strictlyBelow.size());
  std::set<SimplicialComplex::Face> chains;
  chains.insert({});
  SimplicialComplex::Face current;
  auto dfs = [&](auto&& self, int v) -> void {
    current.push_back(v);
    SimplicialComplex::Face face = current;
    std::sort(face.begin(), face.end());
    chains.insert(std::move(face));
    for (int w : strictlyBelow[static_cast<std::size_t>(v)]) self(self, w);
    current.pop_back();
  };
  for (int v = 0; v < n; ++v) dfs(dfs, v);
  return SimplicialComplex::fromClosedFaceSet(n, std::move(chains));
}

}  // namespace

MultigradedBettiTable lcmLatticeBetti(const MonomialIdeal& I,
                                      const FieldConfig& F) {
  const std::vector<Monomial> lattice = lcmClosure(I);
  MultigradedBettiTable T;
  T.ringDim = I.ringDim();
  T.characteristic = F.characteristic();

  for (const Monomial& b : lattice) {
    // Open interval (bottom, b): lattice elements strictly dividing b.
    std::vector<std::size_t> interval;
    for (std::size_t k = 0; k < lattice.size(); ++k)
      if (lattice[k] != b && divides(lattice[k], b)) interval.push_back(k);

    std::vector<std::vector<int>> below(interval.size());
    for (std::size_t a = 0; a < interval.size(); ++a)
      for (std::size_t c = 0; c < interval.size(); ++c)
        if (a != c &&
            divides(lattice[interval[c]], lattice[interval[a]]) &&
            lattice[interval[c]] != lattice[interval[a]])
          below[a].push_back(static_cast<int>(c));

    const auto ranks = reducedHomologyRanks(orderComplex(below), F);
    for (const auto& [q, rank] : ranks)
      T.entries.emplace(std::make_pair(q + 1, b), rank);
  }
  return T;
}

}  // namespace bettipow
