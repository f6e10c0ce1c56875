#ifndef SLAT_RELATIONS_HPP
#define SLAT_RELATIONS_HPP

#include <optional>
#include <vector>

#include "slat/lattice.hpp"

namespace slat {

/// I down-perspective to J: 0_J = 0_I /\ 1_J and 1_I = 0_I \/ 1_J.
bool persp_dn(const PlanarLattice& L, Interval I, Interval J);
bool persp_up(const PlanarLattice& L, Interval I, Interval J);
bool persp(const PlanarLattice& L, Interval I, Interval J);

/// p prime-perspective down to q: p down-perspective to [0_p /\ 1_q, 1_q]
/// with q inside that interval.
bool prime_persp_dn(const PlanarLattice& L, PrimeInterval p, PrimeInterval q);
bool prime_persp_up(const PlanarLattice& L, PrimeInterval p, PrimeInterval q);
bool prime_persp(const PlanarLattice& L, PrimeInterval p, PrimeInterval q);

/// p swings to q: common top covering at least three elements, with 0_q an
/// interior entry of the top's ordered lower-cover list.
bool swing(const PlanarLattice& L, PrimeInterval p, PrimeInterval q);

/// A swing is proper when 0_p is the left-most or right-most element covered
/// by the common top. Throws not_a_swing when swing(p, q) fails.
bool is_proper_swing(const PlanarLattice& L, PrimeInterval p, PrimeInterval q);

/// The S7 sublattice establishing a swing between distinct primes: the
/// sublattice generated by 0_p, 0_q and a third lower cover of the top.
/// Returns std::nullopt when p == q. Throws witness_not_s7 if the generated
/// set fails to be an S7 (would falsify the theory; treated as fatal).
std::optional<std::vector<ElementId>> swing_witness(const PlanarLattice& L,
                                                    PrimeInterval p, PrimeInterval q);

}  // namespace slat

#endif
