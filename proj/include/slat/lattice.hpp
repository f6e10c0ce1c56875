#ifndef SLAT_LATTICE_HPP
#define SLAT_LATTICE_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "slat/errors.hpp"

namespace slat {

using ElementId = int;

struct Interval {
  ElementId bottom;
  ElementId top;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// A pair (bottom, top) with top covering bottom.
struct PrimeInterval {
  ElementId bottom;
  ElementId top;
  friend auto operator<=>(const PrimeInterval&, const PrimeInterval&) = default;
  operator Interval() const { return Interval{bottom, top}; }
};

/// Finite lattice given by cover lists that carry a left-to-right planar
/// order. Meet/join tables are materialized at construction; instances are
/// immutable afterwards and safe to share across threads.
class PlanarLattice {
 public:
  /// Builds from explicitly ordered upper and lower cover lists.
  /// Throws inconsistent_order, not_a_poset, no_bottom_or_top, not_a_lattice.
  static PlanarLattice from_ordered_covers(int n,
                                           std::vector<std::vector<ElementId>> upper,
                                           std::vector<std::vector<ElementId>> lower,
                                           std::vector<std::string> labels = {});

  /// Builds from a list of (lo, hi) cover pairs; per-element cover order is
  /// the order in which pairs appear.
  static PlanarLattice from_cover_pairs(int n,
                                        const std::vector<std::pair<ElementId, ElementId>>& covers,
                                        std::vector<std::string> labels = {});

  int size() const { return n_; }
  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }

  const std::vector<ElementId>& upper_covers(ElementId x) const { return up_[x]; }
  const std::vector<ElementId>& lower_covers(ElementId x) const { return down_[x]; }
  const std::string& label(ElementId x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Returns -1 when no element carries the label.
  ElementId find_label(const std::string& s) const;

  bool leq(ElementId a, ElementId b) const { return leq_[a * n_ + b] != 0; }
  bool lt(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  bool comparable(ElementId a, ElementId b) const { return leq(a, b) || leq(b, a); }
  /// True iff hi covers lo.
  bool covers(ElementId lo, ElementId hi) const;

  ElementId meet(ElementId a, ElementId b) const { return meet_[a * n_ + b]; }
  ElementId join(ElementId a, ElementId b) const { return join_[a * n_ + b]; }

  /// Length of a longest chain from bottom to x.
  int height(ElementId x) const { return height_[x]; }
  /// Deterministic left-to-right surrogate: first-visit index of a DFS from
  /// the bottom that follows upper-cover lists in order.
  int planar_rank(ElementId x) const { return planar_rank_[x]; }

  ElementId leftmost_lower_cover(ElementId x) const;
  ElementId rightmost_lower_cover(ElementId x) const;
  ElementId leftmost_upper_cover(ElementId x) const;
  ElementId rightmost_upper_cover(ElementId x) const;

  std::vector<PrimeInterval> prime_intervals() const;
  int cover_count() const;

  /// Elements of [a, b]; throws not_comparable when a is not below b.
  std::vector<ElementId> interval_elements(ElementId a, ElementId b) const;
  /// Number of covers along a maximal chain of [a, b], found by greedy
  /// descent. Throws not_comparable.
  int length(ElementId a, ElementId b) const;

  /// Chain bottom..top of iterated leftmost (rightmost) upper covers.
  std::vector<ElementId> left_boundary() const;
  std::vector<ElementId> right_boundary() const;

  bool is_semimodular() const;
  bool is_slim() const;
  /// Necessary planar-order conditions: the boundary chains agree when read
  /// from either end.
  bool has_consistent_planar_order() const;
  bool is_sps() const;
  bool is_patch_lattice() const;

  /// The left-right reflection: every cover list reversed.
  PlanarLattice mirrored() const;

 private:
  PlanarLattice() = default;
  void finish_build();

  int n_ = 0;
  ElementId bottom_ = 0, top_ = 0;
  std::vector<std::vector<ElementId>> up_, down_;
  std::vector<std::string> labels_;
  std::vector<char> leq_;
  std::vector<ElementId> meet_, join_;
  std::vector<int> height_;
  std::vector<int> planar_rank_;
};

/// Induced sub-lattice on a subset of elements (must be closed enough to
/// remain a lattice, e.g. an interval or a meet/join-closed set). Cover lists
/// are ordered by planar rank of the host. old_of_new, when given, receives
/// the host id of each new element.
PlanarLattice restrict_to(const PlanarLattice& L, std::vector<ElementId> elems,
                          std::vector<ElementId>* old_of_new = nullptr);

/// Closure of seed under meet and join.
std::vector<ElementId> generated_sublattice(const PlanarLattice& L,
                                            std::vector<ElementId> seed);

/// Order isomorphism (ignores the planar order). Brute force with degree and
/// height pruning; intended for small lattices.
bool order_isomorphic(const PlanarLattice& A, const PlanarLattice& B);

}  // namespace slat

#endif
