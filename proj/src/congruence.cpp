#include "slat/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace slat {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns true when the classes were distinct.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // keep the smaller id as root
    return true;
  }
};

Congruence canonical(UnionFind& uf, int n) {
  Congruence theta;
  theta.block_of.resize(n);
  // Roots are minimal in their class by the union rule, but normalize anyway.
  std::vector<int> rep(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = uf.find(x);
    if (rep[r] < 0 || x < rep[r]) rep[r] = x;
  }
  for (int x = 0; x < n; ++x) theta.block_of[x] = rep[uf.find(x)];
  return theta;
}

}  // namespace

bool Congruence::refines(const Congruence& other) const {
  for (size_t x = 0; x < block_of.size(); ++x)
    if (other.block_of[x] != other.block_of[block_of[x]]) return false;
  return true;
}

bool Congruence::is_identity() const {
  for (size_t x = 0; x < block_of.size(); ++x)
    if (block_of[x] != (int)x) return false;
  return true;
}

int Congruence::block_count() const {
  int c = 0;
  for (size_t x = 0; x < block_of.size(); ++x)
    if (block_of[x] == (int)x) ++c;
  return c;
}

std::vector<std::vector<ElementId>> Congruence::blocks() const {
  std::vector<std::vector<ElementId>> out;
  std::vector<int> idx(block_of.size(), -1);
  for (size_t x = 0; x < block_of.size(); ++x) {
    int r = block_of[x];
    if (idx[r] < 0) {
      idx[r] = (int)out.size();
      out.emplace_back();
    }
    out[idx[r]].push_back((ElementId)x);
  }
  return out;
}

Congruence identity_congruence(int n) {
  Congruence theta;
  theta.block_of.resize(n);
  std::iota(theta.block_of.begin(), theta.block_of.end(), 0);
  return theta;
}

Congruence principal_congruence(const PlanarLattice& L, ElementId a, ElementId b) {
  int n = L.size();
  UnionFind uf(n);
  std::deque<std::pair<int, int>> work;
  if (uf.unite(a, b)) work.push_back({a, b});
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    for (int c = 0; c < n; ++c) {
      int xm = L.meet(x, c), ym = L.meet(y, c);
      if (uf.unite(xm, ym)) work.push_back({xm, ym});
      int xj = L.join(x, c), yj = L.join(y, c);
      if (uf.unite(xj, yj)) work.push_back({xj, yj});
    }
  }
  return canonical(uf, n);
}

bool collapses(const Congruence& theta, PrimeInterval q) {
  return theta.collapses(q);
}

Congruence congruence_join(const Congruence& a, const Congruence& b) {
  int n = (int)a.block_of.size();
  UnionFind uf(n);
  for (int x = 0; x < n; ++x) {
    uf.unite(x, a.block_of[x]);
    uf.unite(x, b.block_of[x]);
  }
  return canonical(uf, n);
}

JiConOrder join_irreducible_congruences(const PlanarLattice& L) {
  // Principal congruences of primes, deduped; every join-irreducible
  // congruence of a finite lattice shows up here.
  std::vector<PrimeInterval> gens;
  std::vector<Congruence> cons;
  for (PrimeInterval p : L.prime_intervals()) {
    Congruence c = principal_congruence(L, p);
    if (std::find(cons.begin(), cons.end(), c) == cons.end()) {
      cons.push_back(std::move(c));
      gens.push_back(p);
    }
  }

  // theta is join-irreducible iff it is not the join of its strict lower set.
  std::vector<int> keep;
  for (size_t i = 0; i < cons.size(); ++i) {
    Congruence acc = identity_congruence(L.size());
    for (size_t j = 0; j < cons.size(); ++j)
      if (j != i && cons[j].refines(cons[i]) && cons[j] != cons[i])
        acc = congruence_join(acc, cons[j]);
    if (acc != cons[i]) keep.push_back((int)i);
  }

  JiConOrder out;
  int m = (int)keep.size();
  out.generators.reserve(m);
  out.congruences.reserve(m);
  for (int i : keep) {
    out.generators.push_back(gens[i]);
    out.congruences.push_back(cons[i]);
  }
  out.leq.assign(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      out.leq[i][j] = out.congruences[i].refines(out.congruences[j]);
  out.upper_covers.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !out.leq[i][j]) continue;
      bool is_cover = true;
      for (int k = 0; k < m && is_cover; ++k)
        if (k != i && k != j && out.leq[i][k] && out.leq[k][j]) is_cover = false;
      if (is_cover) out.upper_covers[i].push_back(j);
    }
  return out;
}

bool two_cover_property(const PlanarLattice& L) {
  JiConOrder ji = join_irreducible_congruences(L);
  for (const auto& ups : ji.upper_covers)
    if (ups.size() > 2) return false;
  return true;
}

std::vector<Congruence> all_congruences(const PlanarLattice& L) {
  std::vector<Congruence> principals;
  for (PrimeInterval p : L.prime_intervals()) {
    Congruence c = principal_congruence(L, p);
    if (std::find(principals.begin(), principals.end(), c) == principals.end())
      principals.push_back(std::move(c));
  }
  std::vector<Congruence> all{identity_congruence(L.size())};
  std::deque<Congruence> work(all.begin(), all.end());
  while (!work.empty()) {
    Congruence cur = std::move(work.front());
    work.pop_front();
    for (const Congruence& p : principals) {
      Congruence j = congruence_join(cur, p);
      if (std::find(all.begin(), all.end(), j) == all.end()) {
        all.push_back(j);
        work.push_back(std::move(j));
      }
    }
  }
  return all;
}

}  // namespace slat
