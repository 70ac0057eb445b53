//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/molgraph/rings.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <utility>

namespace brs {
namespace {

using Adjacency = std::vector<std::vector<Neighbor>>;

Adjacency make_adjacency(int n, std::span<const Bond> bonds) {
  Adjacency adj(n);
  for (int b = 0; b < static_cast<int>(bonds.size()); ++b) {
    adj[bonds[b].begin].push_back({bonds[b].end, b});
    adj[bonds[b].end].push_back({bonds[b].begin, b});
  }
  return adj;
}

// Marks every bond that is not a bridge (iterative lowlink DFS).
std::vector<bool> find_ring_bonds(int n, std::span<const Bond> bonds, const Adjacency &adj) {
  std::vector<bool> in_ring(bonds.size(), true);
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  struct Frame {
    int atom;
    int parent_bond;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack {{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame &f = stack.back();
      if (f.next < adj[f.atom].size()) {
        const Neighbor nb = adj[f.atom][f.next++];
        if (nb.bond == f.parent_bond) continue;
        if (disc[nb.atom] >= 0) {
          low[f.atom] = std::min(low[f.atom], disc[nb.atom]);
        } else {
          disc[nb.atom] = low[nb.atom] = timer++;
          stack.push_back({nb.atom, nb.bond, 0});
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame &parent = stack.back();
        low[parent.atom] = std::min(low[parent.atom], low[done.atom]);
        if (low[done.atom] > disc[parent.atom]) in_ring[done.parent_bond] = false;
      }
    }
  }
  return in_ring;
}

class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t bits) : words_((bits + 63) / 64) {}

  std::vector<std::uint64_t> reduce(std::vector<std::uint64_t> v) const {
    for (const auto &[row, pivot] : rows_)
      if (test(v, pivot))
        for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= row[w];
    return v;
  }

  bool independent(const std::vector<std::uint64_t> &v) const {
    auto r = reduce(v);
    return std::any_of(r.begin(), r.end(), [](std::uint64_t w) { return w != 0; });
  }

  void add(const std::vector<std::uint64_t> &v) {
    auto r = reduce(v);
    for (std::size_t w = 0; w < r.size(); ++w) {
      if (r[w] == 0) continue;
      const int pivot = static_cast<int>(w * 64) + __builtin_ctzll(r[w]);
      for (auto &[row, p] : rows_)
        if (test(row, pivot))
          for (std::size_t k = 0; k < row.size(); ++k) row[k] ^= r[k];
      rows_.emplace_back(std::move(r), pivot);
      return;
    }
  }

  std::size_t size() const { return rows_.size(); }
  std::size_t words() const { return words_; }

 private:
  static bool test(const std::vector<std::uint64_t> &v, int bit) {
    return (v[bit / 64] >> (bit % 64)) & 1U;
  }

  std::size_t words_;
  std::vector<std::pair<std::vector<std::uint64_t>, int>> rows_;
};

struct Candidate {
  Ring ring;
  std::vector<std::uint64_t> edges;
};

}  // namespace

RingSet find_rings(int n, std::span<const Bond> bonds) {
  RingSet out;
  const Adjacency adj = make_adjacency(n, bonds);
  out.bond_in_ring = find_ring_bonds(n, bonds, adj);
  out.atom_ring_count.assign(n, 0);

  std::vector<int> ring_index(bonds.size(), -1);
  int num_ring_bonds = 0;
  for (std::size_t b = 0; b < bonds.size(); ++b)
    if (out.bond_in_ring[b]) ring_index[b] = num_ring_bonds++;
  if (num_ring_bonds == 0) return out;

  std::vector<int> parent(n), parent_bond(n), dist(n);
  std::vector<Candidate> candidates;
  std::set<std::vector<std::uint64_t>> seen;
  const std::size_t words = (num_ring_bonds + 63) / 64;
  std::vector<char> on_path(n, 0);

  for (int v = 0; v < n; ++v) {
    bool has_ring_bond = std::any_of(adj[v].begin(), adj[v].end(),
                                     [&](const Neighbor &nb) { return out.bond_in_ring[nb.bond]; });
    if (!has_ring_bond) continue;
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::fill(parent_bond.begin(), parent_bond.end(), -1);
    std::queue<int> queue;
    dist[v] = 0;
    queue.push(v);
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop();
      for (const Neighbor &nb : adj[a]) {
        if (!out.bond_in_ring[nb.bond] || dist[nb.atom] >= 0) continue;
        dist[nb.atom] = dist[a] + 1;
        parent[nb.atom] = a;
        parent_bond[nb.atom] = nb.bond;
        queue.push(nb.atom);
      }
    }
    for (std::size_t b = 0; b < bonds.size(); ++b) {
      if (!out.bond_in_ring[b]) continue;
      int x = bonds[b].begin, y = bonds[b].end;
      if (dist[x] < 0 || dist[y] < 0) continue;
      if (parent_bond[x] == static_cast<int>(b) || parent_bond[y] == static_cast<int>(b)) continue;
      // The two tree paths must meet only at v.
      for (int a = x; a != -1; a = parent[a]) on_path[a] = 1;
      bool disjoint = true;
      for (int a = y; a != v; a = parent[a])
        if (on_path[a]) disjoint = false;
      for (int a = x; a != -1; a = parent[a]) on_path[a] = 0;
      if (!disjoint) continue;

      Candidate c;
      std::vector<int> path_x, bonds_x;
      for (int a = x; a != v; a = parent[a]) {
        path_x.push_back(a);
        bonds_x.push_back(parent_bond[a]);
      }
      c.ring.atoms.push_back(v);
      for (auto it = path_x.rbegin(); it != path_x.rend(); ++it) c.ring.atoms.push_back(*it);
      for (auto it = bonds_x.rbegin(); it != bonds_x.rend(); ++it) c.ring.bonds.push_back(*it);
      c.ring.bonds.push_back(static_cast<int>(b));
      for (int a = y; a != v; a = parent[a]) {
        c.ring.atoms.push_back(a);
        c.ring.bonds.push_back(parent_bond[a]);
      }
      c.edges.assign(words, 0);
      for (int rb : c.ring.bonds) {
        const int bit = ring_index[rb];
        c.edges[bit / 64] |= std::uint64_t {1} << (bit % 64);
      }
      if (seen.insert(c.edges).second) candidates.push_back(std::move(c));
    }
  }

  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate &a, const Candidate &b) {
    return a.ring.atoms.size() < b.ring.atoms.size();
  });

  // Cyclomatic number E - V + C over the whole graph.
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int a) {
    while (comp[a] != a) a = comp[a] = comp[comp[a]];
    return a;
  };
  int components = n;
  for (const Bond &b : bonds) {
    int ra = find(b.begin), rb = find(b.end);
    if (ra != rb) {
      comp[ra] = rb;
      --components;
    }
  }
  const std::size_t cyclomatic = bonds.size() - n + components;

  Gf2Basis basis(num_ring_bonds);
  std::size_t i = 0;
  while (i < candidates.size()) {
    std::size_t j = i;
    while (j < candidates.size() && candidates[j].ring.atoms.size() == candidates[i].ring.atoms.size())
      ++j;
    if (basis.size() >= cyclomatic) break;
    for (std::size_t k = i; k < j; ++k)
      if (basis.independent(candidates[k].edges)) out.relevant.push_back(candidates[k].ring);
    for (std::size_t k = i; k < j; ++k) {
      if (basis.size() >= cyclomatic) break;
      if (basis.independent(candidates[k].edges)) {
        basis.add(candidates[k].edges);
        out.sssr.push_back(candidates[k].ring);
      }
    }
    i = j;
  }
  for (const Ring &r : out.sssr)
    for (int a : r.atoms) ++out.atom_ring_count[a];
  return out;
}

std::vector<std::vector<int>> ring_systems(int n, std::span<const Bond> bonds,
                                           const std::vector<bool> &bond_in_ring) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<bool> ring_atom(n, false);
  for (std::size_t b = 0; b < bonds.size(); ++b) {
    if (!bond_in_ring[b]) continue;
    ring_atom[bonds[b].begin] = ring_atom[bonds[b].end] = true;
    parent[find(bonds[b].begin)] = find(bonds[b].end);
  }
  std::vector<std::vector<int>> systems;
  std::vector<int> slot(n, -1);
  for (int a = 0; a < n; ++a) {
    if (!ring_atom[a]) continue;
    int r = find(a);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(systems.size());
      systems.emplace_back();
    }
    systems[slot[r]].push_back(a);
  }
  return systems;
}

}  // namespace brs
