#ifndef SLAT_CONGRUENCE_HPP
#define SLAT_CONGRUENCE_HPP

#include <vector>

#include "slat/lattice.hpp"

namespace slat {

/// A congruence in canonical form: block_of[x] is the minimum element of the
/// block containing x.
struct Congruence {
  std::vector<ElementId> block_of;

  friend bool operator==(const Congruence&, const Congruence&) = default;

  bool collapses(ElementId a, ElementId b) const { return block_of[a] == block_of[b]; }
  bool collapses(PrimeInterval q) const { return collapses(q.bottom, q.top); }

  /// Refinement order: every block of *this lies inside a block of other.
  bool refines(const Congruence& other) const;
  bool is_identity() const;
  int block_count() const;
  std::vector<std::vector<ElementId>> blocks() const;
};

Congruence identity_congruence(int n);

/// Smallest congruence collapsing (a, b): union-find closure under meet/join
/// substitution with a work queue of newly merged pairs.
Congruence principal_congruence(const PlanarLattice& L, ElementId a, ElementId b);

inline Congruence principal_congruence(const PlanarLattice& L, PrimeInterval p) {
  return principal_congruence(L, p.bottom, p.top);
}

bool collapses(const Congruence& theta, PrimeInterval q);

/// Join in Con L (transitive closure of the union; substitution survives).
Congruence congruence_join(const Congruence& a, const Congruence& b);

/// The order J(Con L) of join-irreducible congruences, each represented by a
/// generator prime interval.
struct JiConOrder {
  std::vector<PrimeInterval> generators;
  std::vector<Congruence> congruences;
  std::vector<std::vector<char>> leq;           // refinement order
  std::vector<std::vector<int>> upper_covers;   // covers in that order
};

JiConOrder join_irreducible_congruences(const PlanarLattice& L);

/// Every element of J(Con L) has at most two covers.
bool two_cover_property(const PlanarLattice& L);

/// Slow cross-validation path: all congruences, as joins of principal
/// congruences of primes (plus the identity).
std::vector<Congruence> all_congruences(const PlanarLattice& L);

}  // namespace slat

#endif
