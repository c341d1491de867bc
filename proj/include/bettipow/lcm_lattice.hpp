#ifndef BETTIPOW_LCM_LATTICE_HPP
#define BETTIPOW_LCM_LATTICE_HPP

#include "bettipow/betti_tables.hpp"
#include "bettipow/monomial_ideal.hpp"

namespace bettipow {

/// Multigraded Betti numbers by the lcm-lattice route, independent of the
/// upper-Koszul route: for each lattice element b, beta(i, b) is the rank
/// of reduced homology in degree i-1 of the order complex of the open
/// interval (bottom, b). The empty interval at an atom contributes the
/// irrelevant complex, which pins beta(0, generator) = 1.
MultigradedBettiTable lcmLatticeBetti(const MonomialIdeal& I,
                                      const FieldConfig& F);

}  // namespace bettipow

#endif
