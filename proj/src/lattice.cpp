#include "slat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace slat {

const char* to_string(errc c) noexcept {
  switch (c) {
    case errc::not_a_poset: return "NotAPoset";
    case errc::no_bottom_or_top: return "NoBottomOrTop";
    case errc::not_a_lattice: return "NotALattice";
    case errc::inconsistent_order: return "InconsistentOrder";
    case errc::not_comparable: return "NotComparable";
    case errc::bottom_has_no_covers: return "BottomHasNoCovers";
    case errc::unknown_fixture: return "UnknownFixture";
    case errc::not_a_covering_square: return "NotACoveringSquare";
    case errc::not_sps: return "NotSPS";
    case errc::trace_stuck: return "TraceStuck";
    case errc::witness_not_s7: return "WitnessNotS7";
    case errc::not_a_swing: return "NotASwing";
    case errc::not_a_witness: return "NotAWitness";
    case errc::parse_error: return "ParseError";
    case errc::schema_error: return "SchemaError";
    case errc::validation_error: return "ValidationError";
  }
  return "UnknownError";
}

namespace {

bool contains(const std::vector<ElementId>& v, ElementId x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

bool has_duplicates(const std::vector<ElementId>& v) {
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) return true;
  return false;
}

}  // namespace

PlanarLattice PlanarLattice::from_ordered_covers(int n,
                                                 std::vector<std::vector<ElementId>> upper,
                                                 std::vector<std::vector<ElementId>> lower,
                                                 std::vector<std::string> labels) {
  if (n <= 0) fail(errc::no_bottom_or_top, "empty element set");
  if ((int)upper.size() != n || (int)lower.size() != n)
    fail(errc::inconsistent_order, "cover list count does not match n");
  for (int x = 0; x < n; ++x) {
    for (ElementId y : upper[x])
      if (y < 0 || y >= n) fail(errc::inconsistent_order, "cover id out of range");
    for (ElementId y : lower[x])
      if (y < 0 || y >= n) fail(errc::inconsistent_order, "cover id out of range");
    if (has_duplicates(upper[x]) || has_duplicates(lower[x]))
      fail(errc::inconsistent_order, "duplicate entry in a cover list");
  }
  // Mutual consistency of the two lists.
  for (int x = 0; x < n; ++x)
    for (ElementId y : upper[x])
      if (!contains(lower[y], x))
        fail(errc::inconsistent_order, "upper list names a cover missing from the lower list");
  for (int x = 0; x < n; ++x)
    for (ElementId y : lower[x])
      if (!contains(upper[y], x))
        fail(errc::inconsistent_order, "lower list names a cover missing from the upper list");

  PlanarLattice L;
  L.n_ = n;
  L.up_ = std::move(upper);
  L.down_ = std::move(lower);
  if (labels.empty()) labels.resize(n);
  if ((int)labels.size() != n) fail(errc::inconsistent_order, "label count does not match n");
  L.labels_ = std::move(labels);
  L.finish_build();
  return L;
}

PlanarLattice PlanarLattice::from_cover_pairs(int n,
                                              const std::vector<std::pair<ElementId, ElementId>>& covers,
                                              std::vector<std::string> labels) {
  std::vector<std::vector<ElementId>> up(n), down(n);
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      fail(errc::inconsistent_order, "cover id out of range");
    up[lo].push_back(hi);
    down[hi].push_back(lo);
  }
  return from_ordered_covers(n, std::move(up), std::move(down), std::move(labels));
}

void PlanarLattice::finish_build() {
  // Topological order; rejects cycles.
  std::vector<int> indeg(n_, 0);
  for (int x = 0; x < n_; ++x) indeg[x] = (int)down_[x].size();
  std::queue<int> q;
  for (int x = 0; x < n_; ++x)
    if (indeg[x] == 0) q.push(x);
  std::vector<int> topo;
  topo.reserve(n_);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    topo.push_back(x);
    for (int y : up_[x])
      if (--indeg[y] == 0) q.push(y);
  }
  if ((int)topo.size() != n_) fail(errc::not_a_poset, "cover relation has a cycle");

  // Reflexive-transitive closure, bottom-up.
  leq_.assign((size_t)n_ * n_, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int x = *it;
    leq_[(size_t)x * n_ + x] = 1;
    for (int y : up_[x])
      for (int z = 0; z < n_; ++z)
        if (leq_[(size_t)y * n_ + z]) leq_[(size_t)x * n_ + z] = 1;
  }

  int n_min = 0, n_max = 0;
  for (int x = 0; x < n_; ++x) {
    if (down_[x].empty()) {
      bottom_ = x;
      ++n_min;
    }
    if (up_[x].empty()) {
      top_ = x;
      ++n_max;
    }
  }
  if (n_min != 1 || n_max != 1)
    fail(errc::no_bottom_or_top, "expected a unique bottom and a unique top");

  // Cover lists must really be covers: x < y with nothing in between.
  for (int x = 0; x < n_; ++x)
    for (int y : up_[x]) {
      if (!lt(x, y)) fail(errc::not_a_poset, "cover edge not strict");
      for (int z = 0; z < n_; ++z)
        if (z != x && z != y && lt(x, z) && lt(z, y))
          fail(errc::inconsistent_order, "listed cover edge is not a covering");
    }

  meet_.assign((size_t)n_ * n_, -1);
  join_.assign((size_t)n_ * n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = a; b < n_; ++b) {
      int m = -1;
      for (int z = 0; z < n_; ++z)
        if (leq(z, a) && leq(z, b) && (m < 0 || leq(m, z))) m = z;
      // m is a maximal common lower bound; it is the meet iff it dominates all.
      for (int z = 0; z < n_; ++z)
        if (leq(z, a) && leq(z, b) && !leq(z, m))
          fail(errc::not_a_lattice, "pair without a meet");
      int j = -1;
      for (int z = 0; z < n_; ++z)
        if (leq(a, z) && leq(b, z) && (j < 0 || leq(z, j))) j = z;
      for (int z = 0; z < n_; ++z)
        if (leq(a, z) && leq(b, z) && !leq(j, z))
          fail(errc::not_a_lattice, "pair without a join");
      meet_[(size_t)a * n_ + b] = meet_[(size_t)b * n_ + a] = m;
      join_[(size_t)a * n_ + b] = join_[(size_t)b * n_ + a] = j;
    }

  height_.assign(n_, 0);
  for (int x : topo)
    for (int y : up_[x]) height_[y] = std::max(height_[y], height_[x] + 1);

  // DFS preorder from the bottom, children left to right.
  planar_rank_.assign(n_, -1);
  std::vector<int> stack{bottom_};
  int next = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (planar_rank_[x] >= 0) continue;
    planar_rank_[x] = next++;
    for (auto it = up_[x].rbegin(); it != up_[x].rend(); ++it) stack.push_back(*it);
  }
}

ElementId PlanarLattice::find_label(const std::string& s) const {
  for (int x = 0; x < n_; ++x)
    if (labels_[x] == s) return x;
  return -1;
}

bool PlanarLattice::covers(ElementId lo, ElementId hi) const {
  return contains(up_[lo], hi);
}

ElementId PlanarLattice::leftmost_lower_cover(ElementId x) const {
  if (down_[x].empty()) fail(errc::bottom_has_no_covers, "bottom has no lower covers");
  return down_[x].front();
}

ElementId PlanarLattice::rightmost_lower_cover(ElementId x) const {
  if (down_[x].empty()) fail(errc::bottom_has_no_covers, "bottom has no lower covers");
  return down_[x].back();
}

ElementId PlanarLattice::leftmost_upper_cover(ElementId x) const {
  if (up_[x].empty()) fail(errc::bottom_has_no_covers, "top has no upper covers");
  return up_[x].front();
}

ElementId PlanarLattice::rightmost_upper_cover(ElementId x) const {
  if (up_[x].empty()) fail(errc::bottom_has_no_covers, "top has no upper covers");
  return up_[x].back();
}

std::vector<PrimeInterval> PlanarLattice::prime_intervals() const {
  std::vector<PrimeInterval> out;
  for (int x = 0; x < n_; ++x)
    for (int y : up_[x]) out.push_back({x, y});
  std::sort(out.begin(), out.end());
  return out;
}

int PlanarLattice::cover_count() const {
  int c = 0;
  for (int x = 0; x < n_; ++x) c += (int)up_[x].size();
  return c;
}

std::vector<ElementId> PlanarLattice::interval_elements(ElementId a, ElementId b) const {
  if (!leq(a, b)) fail(errc::not_comparable, "interval endpoints not comparable");
  std::vector<ElementId> out;
  for (int z = 0; z < n_; ++z)
    if (leq(a, z) && leq(z, b)) out.push_back(z);
  return out;
}

int PlanarLattice::length(ElementId a, ElementId b) const {
  if (!leq(a, b)) fail(errc::not_comparable, "length endpoints not comparable");
  int steps = 0;
  ElementId cur = b;
  while (cur != a) {
    for (ElementId lo : down_[cur])
      if (leq(a, lo)) {
        cur = lo;
        break;
      }
    ++steps;
  }
  return steps;
}

std::vector<ElementId> PlanarLattice::left_boundary() const {
  std::vector<ElementId> chain{bottom_};
  while (chain.back() != top_) chain.push_back(up_[chain.back()].front());
  return chain;
}

std::vector<ElementId> PlanarLattice::right_boundary() const {
  std::vector<ElementId> chain{bottom_};
  while (chain.back() != top_) chain.push_back(up_[chain.back()].back());
  return chain;
}

bool PlanarLattice::is_semimodular() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (covers(meet(a, b), a) && !covers(b, join(a, b))) return false;
  return true;
}

bool PlanarLattice::is_slim() const {
  // No M3: three pairwise incomparable elements with equal pairwise meets
  // and equal pairwise joins.
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y) {
      if (comparable(x, y)) continue;
      for (int z = y + 1; z < n_; ++z) {
        if (comparable(x, z) || comparable(y, z)) continue;
        if (meet(x, y) == meet(y, z) && meet(y, z) == meet(x, z) &&
            join(x, y) == join(y, z) && join(y, z) == join(x, z))
          return false;
      }
    }
  return true;
}

bool PlanarLattice::has_consistent_planar_order() const {
  // The left boundary read upward (leftmost upper covers from 0) must equal
  // the chain of leftmost lower covers read down from 1; same on the right.
  auto lb = left_boundary();
  std::vector<ElementId> down_chain{top_};
  while (down_chain.back() != bottom_) down_chain.push_back(down_[down_chain.back()].front());
  std::reverse(down_chain.begin(), down_chain.end());
  if (lb != down_chain) return false;
  auto rb = right_boundary();
  down_chain = {top_};
  while (down_chain.back() != bottom_) down_chain.push_back(down_[down_chain.back()].back());
  std::reverse(down_chain.begin(), down_chain.end());
  return rb == down_chain;
}

bool PlanarLattice::is_sps() const {
  return is_slim() && is_semimodular() && has_consistent_planar_order();
}

bool PlanarLattice::is_patch_lattice() const {
  if (!is_sps()) return false;
  const auto& d = down_[top_];
  return d.size() == 2 && meet(d[0], d[1]) == bottom_;
}

PlanarLattice PlanarLattice::mirrored() const {
  auto up = up_;
  auto down = down_;
  for (auto& v : up) std::reverse(v.begin(), v.end());
  for (auto& v : down) std::reverse(v.begin(), v.end());
  return from_ordered_covers(n_, std::move(up), std::move(down), labels_);
}

PlanarLattice restrict_to(const PlanarLattice& L, std::vector<ElementId> elems,
                          std::vector<ElementId>* old_of_new) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  int m = (int)elems.size();
  std::vector<int> new_of_old(L.size(), -1);
  for (int i = 0; i < m; ++i) new_of_old[elems[i]] = i;

  std::vector<std::vector<ElementId>> up(m), down(m);
  for (int i = 0; i < m; ++i) {
    std::vector<ElementId> above;
    for (int j = 0; j < m; ++j)
      if (i != j && L.lt(elems[i], elems[j])) above.push_back(j);
    for (int j : above) {
      bool is_cover = true;
      for (int k : above)
        if (k != j && L.lt(elems[k], elems[j])) {
          is_cover = false;
          break;
        }
      if (is_cover) up[i].push_back(j);
    }
    auto by_rank = [&](int a, int b) {
      return L.planar_rank(elems[a]) < L.planar_rank(elems[b]);
    };
    std::sort(up[i].begin(), up[i].end(), by_rank);
    for (int j : up[i]) down[j].push_back(i);
  }
  for (int j = 0; j < m; ++j)
    std::sort(down[j].begin(), down[j].end(), [&](int a, int b) {
      return L.planar_rank(elems[a]) < L.planar_rank(elems[b]);
    });

  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = L.label(elems[i]);
  if (old_of_new) *old_of_new = elems;
  return PlanarLattice::from_ordered_covers(m, std::move(up), std::move(down), std::move(labels));
}

std::vector<ElementId> generated_sublattice(const PlanarLattice& L,
                                            std::vector<ElementId> seed) {
  std::vector<char> in(L.size(), 0);
  for (ElementId x : seed) in[x] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < L.size(); ++a) {
      if (!in[a]) continue;
      for (int b = a; b < L.size(); ++b) {
        if (!in[b]) continue;
        for (ElementId c : {L.meet(a, b), L.join(a, b)})
          if (!in[c]) {
            in[c] = 1;
            changed = true;
          }
      }
    }
  }
  std::vector<ElementId> out;
  for (int x = 0; x < L.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

namespace {

bool iso_backtrack(const PlanarLattice& A, const PlanarLattice& B,
                   std::vector<int>& map_ab, std::vector<char>& used, int x) {
  int n = A.size();
  if (x == n) return true;
  for (int y = 0; y < n; ++y) {
    if (used[y]) continue;
    if (A.height(x) != B.height(y)) continue;
    if (A.upper_covers(x).size() != B.upper_covers(y).size()) continue;
    if (A.lower_covers(x).size() != B.lower_covers(y).size()) continue;
    bool ok = true;
    for (int z = 0; z < x && ok; ++z) {
      if (A.leq(x, z) != B.leq(y, map_ab[z])) ok = false;
      if (A.leq(z, x) != B.leq(map_ab[z], y)) ok = false;
    }
    if (!ok) continue;
    map_ab[x] = y;
    used[y] = 1;
    if (iso_backtrack(A, B, map_ab, used, x + 1)) return true;
    used[y] = 0;
  }
  return false;
}

}  // namespace

bool order_isomorphic(const PlanarLattice& A, const PlanarLattice& B) {
  if (A.size() != B.size() || A.cover_count() != B.cover_count()) return false;
  std::vector<int> map_ab(A.size(), -1);
  std::vector<char> used(A.size(), 0);
  return iso_backtrack(A, B, map_ab, used, 0);
}

}  // namespace slat
