#include "slat/construct.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace slat {

namespace {

PlanarLattice chain(int k) {
  std::vector<std::pair<ElementId, ElementId>> covers;
  for (int i = 0; i + 1 < k; ++i) covers.push_back({i, i + 1});
  return PlanarLattice::from_cover_pairs(k, covers);
}

PlanarLattice base_fixture(const std::string& name) {
  if (name == "B2")
    return PlanarLattice::from_cover_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                                           {"o", "a_l", "a_r", "t"});
  if (name == "N5")
    return PlanarLattice::from_cover_pairs(5, {{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}},
                                           {"o", "u", "v", "w", "i"});
  if (name == "M3")
    return PlanarLattice::from_cover_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
                                           {"o", "a", "b", "c", "i"});
  if (name == "S7")
    return PlanarLattice::from_cover_pairs(
        7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6}},
        {"o", "z_l", "z_r", "a_l", "m", "a_r", "t"});
  if (name.size() >= 2 && name[0] == 'C') {
    int k = 0;
    for (size_t i = 1; i < name.size(); ++i) {
      if (!isdigit((unsigned char)name[i])) fail(errc::unknown_fixture, name);
      k = k * 10 + (name[i] - '0');
    }
    if (k < 1) fail(errc::unknown_fixture, name);
    return chain(k);
  }
  fail(errc::unknown_fixture, name);
}

}  // namespace

PlanarLattice product(const PlanarLattice& A, const PlanarLattice& B) {
  int na = A.size(), nb = B.size();
  auto id = [nb](int a, int b) { return a * nb + b; };
  std::vector<std::vector<ElementId>> up(na * nb), down(na * nb);
  std::vector<std::string> labels(na * nb);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) {
      for (int a2 : A.upper_covers(a)) up[id(a, b)].push_back(id(a2, b));
      for (int b2 : B.upper_covers(b)) up[id(a, b)].push_back(id(a, b2));
      for (int b2 : B.lower_covers(b)) down[id(a, b)].push_back(id(a, b2));
      for (int a2 : A.lower_covers(a)) down[id(a, b)].push_back(id(a2, b));
      labels[id(a, b)] = A.label(a) + "*" + B.label(b);
    }
  return PlanarLattice::from_ordered_covers(na * nb, std::move(up), std::move(down),
                                            std::move(labels));
}

PlanarLattice fixture(const std::string& name) {
  size_t pos = name.find('x');
  if (pos == std::string::npos) return base_fixture(name);
  PlanarLattice acc = base_fixture(name.substr(0, pos));
  std::string rest = name.substr(pos + 1);
  while (true) {
    size_t next = rest.find('x');
    if (next == std::string::npos) return product(acc, base_fixture(rest));
    acc = product(acc, base_fixture(rest.substr(0, next)));
    rest = rest.substr(next + 1);
  }
}

bool is_covering_square(const PlanarLattice& L, const CoveringSquare& S) {
  if (S.left == S.right) return false;
  const auto& lows = L.lower_covers(S.top);
  auto il = std::find(lows.begin(), lows.end(), S.left);
  auto ir = std::find(lows.begin(), lows.end(), S.right);
  if (il == lows.end() || ir == lows.end() || il >= ir) return false;
  return L.meet(S.left, S.right) == S.o && L.covers(S.o, S.left) && L.covers(S.o, S.right);
}

std::vector<CoveringSquare> covering_squares(const PlanarLattice& L) {
  std::vector<CoveringSquare> out;
  for (int t = 0; t < L.size(); ++t) {
    const auto& lows = L.lower_covers(t);
    for (size_t i = 0; i < lows.size(); ++i)
      for (size_t j = i + 1; j < lows.size(); ++j) {
        CoveringSquare S{L.meet(lows[i], lows[j]), lows[i], lows[j], t};
        if (L.covers(S.o, S.left) && L.covers(S.o, S.right)) out.push_back(S);
      }
  }
  return out;
}

namespace {

// One side of the fork descent. step_cover picks the next x; boundary is the
// element set of the relevant boundary chain.
void trace_side(const PlanarLattice& L, ElementId x0, ElementId y0, bool left_side,
                const std::set<ElementId>& boundary, std::vector<ElementId>& xs,
                std::vector<ElementId>& ys) {
  xs = {x0};
  ys = {y0};
  while (!(boundary.count(xs.back()) && boundary.count(ys.back()))) {
    ElementId x = xs.back(), y = ys.back();
    // Next x is the lower cover of x right next to y in the planar order (on
    // the outward side). The extreme cover is wrong once x has three lower
    // covers, e.g. at the middle element of an earlier fork.
    const auto& lows = L.lower_covers(x);
    auto it = std::find(lows.begin(), lows.end(), y);
    if (it == lows.end()) fail(errc::trace_stuck, "y chain left the lower covers of x");
    if (left_side ? it == lows.begin() : it + 1 == lows.end())
      fail(errc::trace_stuck, "no lower cover on the outward side of y");
    ElementId xn = left_side ? *(it - 1) : *(it + 1);
    ElementId yn = L.meet(xn, y);
    if (!L.covers(yn, xn) || !L.covers(yn, y))
      fail(errc::trace_stuck, "next step is not a covering square");
    CoveringSquare next = left_side ? CoveringSquare{yn, xn, y, x} : CoveringSquare{yn, y, xn, x};
    if (!is_covering_square(L, next))
      fail(errc::trace_stuck, "next step is not a covering square");
    xs.push_back(xn);
    ys.push_back(yn);
  }
}

}  // namespace

ForkTrace fork_trace(const PlanarLattice& L, const CoveringSquare& S) {
  if (!L.is_sps()) fail(errc::not_sps, "fork_trace requires an SPS lattice");
  if (!is_covering_square(L, S)) fail(errc::not_a_covering_square, "fork_trace");

  auto lb_chain = L.left_boundary();
  auto rb_chain = L.right_boundary();
  std::set<ElementId> lb(lb_chain.begin(), lb_chain.end());
  std::set<ElementId> rb(rb_chain.begin(), rb_chain.end());

  ForkTrace tr;
  trace_side(L, S.left, S.o, true, lb, tr.xs_left, tr.ys_left);
  trace_side(L, S.right, S.o, false, rb, tr.xs_right, tr.ys_right);

  // G[S] must be join-closed in L.
  std::vector<ElementId> g{S.o, S.left, S.right, S.top};
  for (auto* v : {&tr.xs_left, &tr.ys_left, &tr.xs_right, &tr.ys_right})
    g.insert(g.end(), v->begin(), v->end());
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i; j < g.size(); ++j)
      if (!std::binary_search(g.begin(), g.end(), L.join(g[i], g[j])))
        fail(errc::trace_stuck, "G[S] is not join-closed");

  // Each traced chain pair forms a C2 x C_n grid as a subposet of L. (The
  // interval spanned by it can pick up extra elements from earlier forks, so
  // the check restricts to the chains themselves.)
  for (auto [xs, ys] : {std::pair{&tr.xs_left, &tr.ys_left}, {&tr.xs_right, &tr.ys_right}}) {
    std::vector<ElementId> grid(xs->begin(), xs->end());
    grid.insert(grid.end(), ys->begin(), ys->end());
    try {
      if (!order_isomorphic(restrict_to(L, grid), product(chain(2), chain((int)xs->size()))))
        fail(errc::trace_stuck, "traced chains do not form a C2 x Cn grid");
    } catch (const error& e) {
      if (e.code() == errc::trace_stuck) throw;
      fail(errc::trace_stuck, "traced chains do not form a C2 x Cn grid");
    }
  }
  return tr;
}

namespace {

std::string fresh_label(const std::vector<std::string>& taken, std::string want) {
  while (std::find(taken.begin(), taken.end(), want) != taken.end()) want += "'";
  return want;
}

void replace_entry(std::vector<ElementId>& v, ElementId from, ElementId to) {
  *std::find(v.begin(), v.end(), from) = to;
}

}  // namespace

PlanarLattice fork_insert(const PlanarLattice& L, const CoveringSquare& S) {
  if (!L.is_sps()) fail(errc::not_sps, "fork_insert requires an SPS lattice");
  if (!is_covering_square(L, S)) fail(errc::not_a_covering_square, "fork_insert");
  ForkTrace tr = fork_trace(L, S);

  int n = L.size();
  int nl = (int)tr.xs_left.size(), nr = (int)tr.xs_right.size();
  int m = n;
  auto zl = [&](int k) { return n + k; };            // k = 1..nl
  auto zr = [&](int k) { return n + nl + k; };       // k = 1..nr
  int total = n + 1 + nl + nr;

  std::vector<std::vector<ElementId>> up(total), down(total);
  std::vector<std::string> labels(total);
  for (int x = 0; x < n; ++x) {
    up[x] = L.upper_covers(x);
    down[x] = L.lower_covers(x);
    labels[x] = L.label(x);
  }

  // m sits between a_l and a_r, immediately after a_l.
  auto& tl = down[S.top];
  tl.insert(std::find(tl.begin(), tl.end(), S.left) + 1, m);
  up[m] = {S.top};
  down[m] = {zl(1), zr(1)};

  for (int k = 1; k <= nl; ++k) {
    ElementId x = tr.xs_left[k - 1], y = tr.ys_left[k - 1];
    replace_entry(down[x], y, zl(k));
    replace_entry(up[y], x, zl(k));
    up[zl(k)] = {x, k == 1 ? m : zl(k - 1)};
    down[zl(k)] = k < nl ? std::vector<ElementId>{zl(k + 1), y} : std::vector<ElementId>{y};
  }
  for (int k = 1; k <= nr; ++k) {
    ElementId x = tr.xs_right[k - 1], y = tr.ys_right[k - 1];
    replace_entry(down[x], y, zr(k));
    replace_entry(up[y], x, zr(k));
    up[zr(k)] = {k == 1 ? m : zr(k - 1), x};
    down[zr(k)] = k < nr ? std::vector<ElementId>{y, zr(k + 1)} : std::vector<ElementId>{y};
  }

  labels[m] = fresh_label(labels, "m");
  for (int k = 1; k <= nl; ++k)
    labels[zl(k)] = fresh_label(labels, "zl" + std::to_string(k));
  for (int k = 1; k <= nr; ++k)
    labels[zr(k)] = fresh_label(labels, "zr" + std::to_string(k));

  PlanarLattice K =
      PlanarLattice::from_ordered_covers(total, std::move(up), std::move(down), std::move(labels));

  // Construction postconditions.
  auto ot = K.interval_elements(S.o, S.top);
  if (ot.size() != 7 || !order_isomorphic(restrict_to(K, ot), fixture("S7")))
    fail(errc::validation_error, "fork_insert: [o,t] did not become an S7");
  // The subdivided chain triples now form C3 x C_n grids as subposets.
  auto grid3 = [&](const std::vector<ElementId>& xs, const std::vector<ElementId>& ys,
                   auto z_of) {
    std::vector<ElementId> g(xs.begin(), xs.end());
    for (int k = 1; k <= (int)xs.size(); ++k) g.push_back(z_of(k));
    g.insert(g.end(), ys.begin(), ys.end());
    return order_isomorphic(restrict_to(K, g), product(chain(3), chain((int)xs.size())));
  };
  if (!grid3(tr.xs_left, tr.ys_left, zl) || !grid3(tr.xs_right, tr.ys_right, zr))
    fail(errc::validation_error, "fork_insert: subdivided chains are not a C3 x Cn grid");
  if (!K.is_sps()) fail(errc::validation_error, "fork_insert: result is not SPS");

  // Old covers survive except the subdivided ones.
  std::set<std::pair<ElementId, ElementId>> subdivided;
  for (int k = 1; k <= nl; ++k) subdivided.insert({tr.ys_left[k - 1], tr.xs_left[k - 1]});
  for (int k = 1; k <= nr; ++k) subdivided.insert({tr.ys_right[k - 1], tr.xs_right[k - 1]});
  for (PrimeInterval p : L.prime_intervals())
    if (!subdivided.count({p.bottom, p.top}) && !K.covers(p.bottom, p.top))
      fail(errc::validation_error, "fork_insert: an untouched cover was lost");
  return K;
}

std::string canonical_diagram_form(const PlanarLattice& L) {
  // BFS from the bottom expanding upper covers left to right; the visit
  // order is the canonical relabeling (ordered diagrams are rigid).
  int n = L.size();
  std::vector<int> new_id(n, -1);
  std::vector<ElementId> order;
  order.reserve(n);
  new_id[L.bottom()] = 0;
  order.push_back(L.bottom());
  for (size_t head = 0; head < order.size(); ++head)
    for (ElementId y : L.upper_covers(order[head]))
      if (new_id[y] < 0) {
        new_id[y] = (int)order.size();
        order.push_back(y);
      }
  std::ostringstream os;
  os << n << '|';
  for (ElementId x : order) {
    os << 'u';
    for (ElementId y : L.upper_covers(x)) os << new_id[y] << ',';
    os << 'd';
    for (ElementId y : L.lower_covers(x)) os << new_id[y] << ',';
    os << ';';
  }
  return os.str();
}

std::string canonical_form(const PlanarLattice& L) {
  return std::min(canonical_diagram_form(L), canonical_diagram_form(L.mirrored()));
}

namespace {

// Iterated invariant refinement: per-element color from height, degrees, and
// neighbor color multisets.
std::vector<int> refine_colors(const PlanarLattice& L) {
  int n = L.size();
  std::vector<int> color(n, 0);
  {
    std::map<std::tuple<int, size_t, size_t>, int> key;
    for (int x = 0; x < n; ++x) {
      auto k = std::make_tuple(L.height(x), L.upper_covers(x).size(), L.lower_covers(x).size());
      auto [it, _] = key.try_emplace(k, (int)key.size());
      color[x] = it->second;
    }
  }
  while (true) {
    std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> key;
    std::vector<int> next(n);
    for (int x = 0; x < n; ++x) {
      std::vector<int> ups, downs;
      for (int y : L.upper_covers(x)) ups.push_back(color[y]);
      for (int y : L.lower_covers(x)) downs.push_back(color[y]);
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      auto k = std::make_tuple(color[x], std::move(ups), std::move(downs));
      auto [it, _] = key.try_emplace(k, (int)key.size());
      next[x] = it->second;
    }
    if (next == color) return color;
    color = std::move(next);
  }
}

struct OrderCanon {
  const PlanarLattice& L;
  std::vector<int> slot_class;           // required class per position
  std::vector<std::vector<int>> members; // class -> elements
  std::vector<int> perm;                 // position -> element
  std::vector<char> used;
  std::string best;

  void encode_and_keep() {
    int n = L.size();
    std::string enc((size_t)n * n, '0');
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (L.leq(perm[i], perm[j])) enc[(size_t)i * n + j] = '1';
    if (best.empty() || enc < best) best = enc;
  }

  void rec(int pos) {
    int n = L.size();
    if (pos == n) {
      encode_and_keep();
      return;
    }
    for (int x : members[slot_class[pos]]) {
      if (used[x]) continue;
      perm[pos] = x;
      used[x] = 1;
      rec(pos + 1);
      used[x] = 0;
    }
  }
};

}  // namespace

std::string canonical_order_form(const PlanarLattice& L) {
  int n = L.size();
  std::vector<int> color = refine_colors(L);
  // Sort classes by a canonical key so isomorphic lattices agree on slots.
  int nc = 1 + *std::max_element(color.begin(), color.end());
  std::vector<std::tuple<int, size_t, size_t, int>> class_key(nc);
  std::vector<std::vector<int>> members(nc);
  for (int x = 0; x < n; ++x) {
    class_key[color[x]] =
        std::make_tuple(L.height(x), L.upper_covers(x).size(), L.lower_covers(x).size(), 0);
    members[color[x]].push_back(x);
  }
  for (int c = 0; c < nc; ++c) std::get<3>(class_key[c]) = (int)members[c].size();
  std::vector<int> class_order(nc);
  std::iota(class_order.begin(), class_order.end(), 0);
  std::sort(class_order.begin(), class_order.end(), [&](int a, int b) {
    return class_key[a] != class_key[b] ? class_key[a] < class_key[b] : a < b;
  });
  // Tie between classes with identical keys keeps index order; safe because
  // a full permutation search runs inside every class anyway and identical
  // keys with distinct refinement colors cannot swap under isomorphism only
  // if the refinement separated them, which the search respects per lattice.
  // To stay sound across lattices, merge classes with equal keys.
  std::map<std::tuple<int, size_t, size_t, int>, std::vector<int>> merged;
  for (int c = 0; c < nc; ++c)
    for (int x : members[c]) merged[class_key[c]].push_back(x);
  OrderCanon oc{L, {}, {}, std::vector<int>(n, -1), std::vector<char>(n, 0), {}};
  for (auto& [k, xs] : merged) {
    int idx = (int)oc.members.size();
    oc.members.push_back(xs);
    for (size_t i = 0; i < xs.size(); ++i) oc.slot_class.push_back(idx);
  }
  oc.rec(0);
  return oc.best;
}

std::vector<GeneratedLattice> generate_patch_lattices(int max_forks,
                                                      const ForkCallback& on_insert) {
  std::vector<GeneratedLattice> out;
  std::set<std::string> seen;
  PlanarLattice b2 = fixture("B2");
  out.push_back({b2, 0, canonical_form(b2)});
  seen.insert(out.back().canon);
  size_t frontier_begin = 0;
  for (int depth = 1; depth <= max_forks; ++depth) {
    size_t frontier_end = out.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      if (out[i].fork_depth != depth - 1) continue;
      // Copy: fork_insert may grow `out` and invalidate references.
      PlanarLattice parent = out[i].lattice;
      for (const CoveringSquare& S : covering_squares(parent)) {
        PlanarLattice child = fork_insert(parent, S);
        if (on_insert) on_insert(parent, S, child, depth);
        if (!child.is_sps()) fail(errc::validation_error, "generated lattice is not SPS");
        std::string canon = canonical_form(child);
        if (seen.insert(canon).second) out.push_back({std::move(child), depth, std::move(canon)});
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

}  // namespace slat
