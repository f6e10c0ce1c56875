#ifndef SLAT_CONSTRUCT_HPP
#define SLAT_CONSTRUCT_HPP

#include <functional>
#include <string>
#include <vector>

#include "slat/lattice.hpp"

namespace slat {

/// Cover-square {o, left, right, top} with left before right in the top's
/// ordered lower covers.
struct CoveringSquare {
  ElementId o, left, right, top;
  friend auto operator<=>(const CoveringSquare&, const CoveringSquare&) = default;
};

/// The two descending chain pairs of the fork construction; index k holds
/// x_{l,k+1} / y_{l,k+1} etc. xs_left[0] is the left side of the square and
/// ys_left[0] its bottom.
struct ForkTrace {
  std::vector<ElementId> xs_left, ys_left;
  std::vector<ElementId> xs_right, ys_right;
};

/// Named fixtures: B2, N5, M3, S7, C<k> (k-element chain), and products
/// spelled with 'x' such as C2xC3 or B2xC2.
PlanarLattice fixture(const std::string& name);

/// Direct product with covers ordered first-factor-first.
PlanarLattice product(const PlanarLattice& A, const PlanarLattice& B);

bool is_covering_square(const PlanarLattice& L, const CoveringSquare& S);
std::vector<CoveringSquare> covering_squares(const PlanarLattice& L);

/// Maximal chains of the fork construction, descending from the square to
/// the boundaries. Verifies on the way: every step is again a covering
/// square, G[S] is join-closed, the final grid intervals are C2 x C_n.
/// Throws trace_stuck when a step fails.
ForkTrace fork_trace(const PlanarLattice& L, const CoveringSquare& S);

/// Inserts a fork at S. New element ids: m = n, then the left chain, then the
/// right chain. Validates the construction output (interval [o,t] becomes an
/// S7, subdivided grids become C3 x C_n, result is SPS).
PlanarLattice fork_insert(const PlanarLattice& L, const CoveringSquare& S);

/// Canonical byte-string of the ordered diagram (exact diagram isomorphism).
std::string canonical_diagram_form(const PlanarLattice& L);
/// Diagram form up to left-right reflection; the dedup key of the generator.
std::string canonical_form(const PlanarLattice& L);
/// Canonical byte-string under order isomorphism (planar order ignored);
/// backtracking over label permutations inside invariant classes.
std::string canonical_order_form(const PlanarLattice& L);

struct GeneratedLattice {
  PlanarLattice lattice;
  int fork_depth = 0;
  std::string canon;  // canonical_form
};

using ForkCallback = std::function<void(const PlanarLattice& parent, const CoveringSquare& square,
                                        const PlanarLattice& child, int depth)>;

/// All distinct lattices reachable from B2 by at most max_forks fork
/// insertions (the slim patch lattice family of the structure theorem),
/// deduped by canonical_form up to reflection. The callback sees every
/// insertion along every generation path, before dedup.
std::vector<GeneratedLattice> generate_patch_lattices(int max_forks,
                                                      const ForkCallback& on_insert = {});

}  // namespace slat

#endif
