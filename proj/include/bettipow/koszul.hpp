#ifndef BETTIPOW_KOSZUL_HPP
#define BETTIPOW_KOSZUL_HPP

#include <vector>

#include "bettipow/betti_tables.hpp"
#include "bettipow/monomial_ideal.hpp"
#include "bettipow/simplicial_complex.hpp"

namespace bettipow {

/// Join-closure (lcm lattice without the bottom element) of the generator
/// multidegrees, computed by fixpoint iteration with deduplication.
/// Returned in canonical graded-lexicographic order.
std::vector<Monomial> lcmClosure(const MonomialIdeal& I);

/// The upper Koszul complex K^b(I): faces are the squarefree sigma within
/// the support of b such that x^b / x^sigma lies in I. Equals the union of
/// full simplices on {v : g_v < b_v} over generators g dividing b, so for a
/// minimal generator b it degenerates to the irrelevant complex and for b
/// outside the ideal to the void complex.
SimplicialComplex upperKoszulComplex(const MonomialIdeal& I, const Monomial& b);

/// Multigraded Betti numbers over F: for every b in the lcm closure,
/// beta(i, b) = rank of reduced homology of K^b(I) in degree i-1.
/// Per-multidegree work runs on `threads` workers (0 = hardware default);
/// results merge in canonical key order, so output is schedule-independent.
MultigradedBettiTable multigradedBetti(const MonomialIdeal& I,
                                       const FieldConfig& F, int threads = 0);

/// Graded Betti numbers: degree-sums of multigradedBetti.
GradedBettiTable gradedBetti(const MonomialIdeal& I, const FieldConfig& F,
                             int threads = 0);

}  // namespace bettipow

#endif
