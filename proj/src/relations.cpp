#include "slat/relations.hpp"

#include <algorithm>

namespace slat {

bool persp_dn(const PlanarLattice& L, Interval I, Interval J) {
  return L.meet(I.bottom, J.top) == J.bottom && L.join(I.bottom, J.top) == I.top;
}

bool persp_up(const PlanarLattice& L, Interval I, Interval J) {
  return persp_dn(L, J, I);
}

bool persp(const PlanarLattice& L, Interval I, Interval J) {
  return persp_dn(L, I, J) || persp_up(L, I, J);
}

bool prime_persp_dn(const PlanarLattice& L, PrimeInterval p, PrimeInterval q) {
  return L.join(p.bottom, q.top) == p.top && L.leq(L.meet(p.bottom, q.top), q.bottom);
}

bool prime_persp_up(const PlanarLattice& L, PrimeInterval p, PrimeInterval q) {
  return L.meet(p.top, q.bottom) == p.bottom && L.leq(q.top, L.join(p.top, q.bottom));
}

bool prime_persp(const PlanarLattice& L, PrimeInterval p, PrimeInterval q) {
  return prime_persp_dn(L, p, q) || prime_persp_up(L, p, q);
}

bool swing(const PlanarLattice& L, PrimeInterval p, PrimeInterval q) {
  if (p.top != q.top) return false;
  const auto& lows = L.lower_covers(p.top);
  if (lows.size() < 3) return false;
  auto it = std::find(lows.begin(), lows.end(), q.bottom);
  return it != lows.begin() && it != lows.end() - 1;
}

bool is_proper_swing(const PlanarLattice& L, PrimeInterval p, PrimeInterval q) {
  if (!swing(L, p, q)) fail(errc::not_a_swing, "is_proper_swing on a non-swing pair");
  const auto& lows = L.lower_covers(p.top);
  return p.bottom == lows.front() || p.bottom == lows.back();
}

namespace {

const PlanarLattice& s7_reference() {
  // o=0, zl=1, zr=2, al=3, m=4, ar=5, t=6
  static const PlanarLattice s7 = PlanarLattice::from_cover_pairs(
      7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6}});
  return s7;
}

}  // namespace

std::optional<std::vector<ElementId>> swing_witness(const PlanarLattice& L,
                                                    PrimeInterval p, PrimeInterval q) {
  if (!swing(L, p, q)) fail(errc::not_a_swing, "swing_witness on a non-swing pair");
  if (p == q) return std::nullopt;
  for (ElementId w : L.lower_covers(p.top)) {
    if (w == p.bottom || w == q.bottom) continue;
    auto gen = generated_sublattice(L, {p.bottom, q.bottom, w});
    if (gen.size() != 7 || !order_isomorphic(restrict_to(L, gen), s7_reference()))
      fail(errc::witness_not_s7, "generated sublattice of a swing is not an S7");
    return gen;
  }
  fail(errc::witness_not_s7, "no third lower cover available");
}

}  // namespace slat
