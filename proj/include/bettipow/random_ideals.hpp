#ifndef BETTIPOW_RANDOM_IDEALS_HPP
#define BETTIPOW_RANDOM_IDEALS_HPP

#include <cstdint>

#include "bettipow/monomial_ideal.hpp"

namespace bettipow {

/// Seeded sample of `edgeCount` distinct edges on N vertices, returned as a
/// squarefree degree-2 ideal. Same seed, same ideal, on every platform
/// (mt19937_64 with plain modulo mapping, no library distributions).
MonomialIdeal randomEdgeIdeal(int N, int edgeCount, std::uint64_t seed);

/// Seeded random monomial ideal for self-test corpora: up to maxGens
/// distinct monomials in N variables with total degree in [1, maxDegree],
/// then minimalized (the result may have fewer generators).
MonomialIdeal randomMonomialIdeal(int N, int maxGens, int maxDegree,
                                  std::uint64_t seed);

}  // namespace bettipow

#endif
