#include "bettipow/random_ideals.hpp"

#include <random>
#include <unordered_set>

namespace bettipow {

namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;  // deterministic; slight modulo bias is irrelevant here
}

}  // namespace

MonomialIdeal randomEdgeIdeal(int N, int edgeCount, std::uint64_t seed) {
  if (N < 2) throw PreconditionError("randomEdgeIdeal: need at least 2 vertices");
  const std::int64_t allEdges = static_cast<std::int64_t>(N) * (N - 1) / 2;
  if (edgeCount < 1 || edgeCount > allEdges)
    throw PreconditionError("randomEdgeIdeal: edge count " +
                            std::to_string(edgeCount) + " infeasible on " +
                            std::to_string(N) + " vertices");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(allEdges));
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) edges.push_back({a, b});

  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates: the first edgeCount slots become the sample.
  for (int k = 0; k < edgeCount; ++k) {
    const std::size_t pick =
        static_cast<std::size_t>(k) +
        static_cast<std::size_t>(below(rng, edges.size() - static_cast<std::size_t>(k)));
    std::swap(edges[static_cast<std::size_t>(k)], edges[pick]);
  }

  std::vector<Monomial> gens;
  for (int k = 0; k < edgeCount; ++k) {
    std::vector<Exponent> e(static_cast<std::size_t>(N), 0);
    e[static_cast<std::size_t>(edges[static_cast<std::size_t>(k)].first)] = 1;
    e[static_cast<std::size_t>(edges[static_cast<std::size_t>(k)].second)] = 1;
    gens.push_back(Monomial(std::move(e)));
  }
  return minimalize(gens, N);
}

MonomialIdeal randomMonomialIdeal(int N, int maxGens, int maxDegree,
                                  std::uint64_t seed) {
  if (N < 1 || maxGens < 1 || maxDegree < 1)
    throw PreconditionError("randomMonomialIdeal: parameters must be positive");
  std::mt19937_64 rng(seed);
  std::unordered_set<Monomial, MonomialHash> gens;
  int attempts = 0;
  while (static_cast<int>(gens.size()) < maxGens && attempts < maxGens * 20) {
    ++attempts;
    std::vector<Exponent> e(static_cast<std::size_t>(N), 0);
    const int deg =
        1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(maxDegree)));
    for (int t = 0; t < deg; ++t)
      ++e[static_cast<std::size_t>(below(rng, static_cast<std::uint64_t>(N)))];
    gens.insert(Monomial(std::move(e)));
  }
  return minimalize(std::vector<Monomial>(gens.begin(), gens.end()), N);
}

}  // namespace bettipow
