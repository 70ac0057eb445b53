//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/molgraph/molecule.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "brs/molgraph/element.h"
#include "brs/molgraph/rings.h"
#include "internal.h"

namespace brs {

int MolGraph::add_atom(const Atom &atom) {
  atoms.push_back(atom);
  return static_cast<int>(atoms.size()) - 1;
}

int MolGraph::add_bond(int a, int b, BondOrder order) {
  bonds.push_back({a, b, order});
  return static_cast<int>(bonds.size()) - 1;
}

int MolGraph::find_bond(int a, int b) const {
  for (int i = 0; i < static_cast<int>(bonds.size()); ++i) {
    const Bond &bd = bonds[i];
    if ((bd.begin == a && bd.end == b) || (bd.begin == b && bd.end == a)) return i;
  }
  return -1;
}

int MolGraph::bond_sum(int atom) const {
  int sum = 0;
  for (const Bond &b : bonds)
    if (b.begin == atom || b.end == atom) sum += valence_contribution(b.order);
  return sum;
}

namespace internal {

std::optional<bool> needs_double(const Atom &atom, int sum_with_h) {
  if (is_allowed_valence(atom.element, atom.charge, sum_with_h)) return false;
  if (is_allowed_valence(atom.element, atom.charge, sum_with_h + 1)) return true;
  return std::nullopt;
}

namespace {

class Matcher {
 public:
  Matcher(int n, std::span<const Bond> bonds, std::span<const int> candidates,
          const std::vector<char> &need)
      : bonds_(bonds), need_(need), incident_(n), matched_(n, 0) {
    for (int b : candidates) {
      const Bond &bd = bonds[b];
      if (!need[bd.begin] || !need[bd.end]) continue;
      incident_[bd.begin].push_back(b);
      incident_[bd.end].push_back(b);
    }
    for (int a = 0; a < n; ++a)
      if (need[a]) ++remaining_;
  }

  bool solve(std::vector<int> &chosen) {
    if (remaining_ == 0) return true;
    if (++steps_ > kMaxSteps) throw KekulizeError("kekulization search limit exceeded");
    int best = -1, best_count = 0;
    for (int a = 0; a < static_cast<int>(incident_.size()); ++a) {
      if (!need_[a] || matched_[a]) continue;
      int count = 0;
      for (int b : incident_[a])
        if (!matched_[bonds_[b].other(a)]) ++count;
      if (best < 0 || count < best_count) {
        best = a;
        best_count = count;
        if (count <= 1) break;
      }
    }
    if (best_count == 0) return false;
    for (int b : incident_[best]) {
      int other = bonds_[b].other(best);
      if (matched_[other]) continue;
      matched_[best] = matched_[other] = 1;
      remaining_ -= 2;
      chosen.push_back(b);
      if (solve(chosen)) return true;
      chosen.pop_back();
      remaining_ += 2;
      matched_[best] = matched_[other] = 0;
    }
    return false;
  }

 private:
  static constexpr long kMaxSteps = 2'000'000;

  std::span<const Bond> bonds_;
  const std::vector<char> &need_;
  std::vector<std::vector<int>> incident_;
  std::vector<char> matched_;
  int remaining_ = 0;
  long steps_ = 0;
};

}  // namespace

bool perfect_matching(int num_atoms, std::span<const Bond> bonds,
                      std::span<const int> candidate_bonds, const std::vector<char> &need,
                      std::vector<int> &chosen) {
  chosen.clear();
  Matcher m(num_atoms, bonds, candidate_bonds, need);
  return m.solve(chosen);
}

}  // namespace internal

Molecule Molecule::from_graph(MolGraph graph, const BuildOptions &options) {
  const int n = static_cast<int>(graph.atoms.size());
  for (const Atom &a : graph.atoms) {
    if (!is_supported_element(a.element))
      throw ChemError("unsupported element " + std::to_string(a.element));
    if (a.implicit_h < 0) throw ValenceError("negative hydrogen count");
  }
  std::vector<std::vector<int>> seen(n);
  for (const Bond &b : graph.bonds) {
    if (b.begin < 0 || b.end < 0 || b.begin >= n || b.end >= n)
      throw ChemError("bond endpoint out of range");
    if (b.begin == b.end) throw ChemError("self-loop bond");
    auto &row = seen[std::min(b.begin, b.end)];
    if (std::find(row.begin(), row.end(), std::max(b.begin, b.end)) != row.end())
      throw ChemError("duplicate bond");
    row.push_back(std::max(b.begin, b.end));
    if (b.order == BondOrder::kAromatic) {
      if (!options.perceive_aromaticity) throw ChemError("aromatic bond in Kekule-only build");
      if (!graph.atoms[b.begin].aromatic || !graph.atoms[b.end].aromatic)
        throw ChemError("aromatic bond between non-aromatic atoms");
    }
  }

  // Kekulize aromatic bonds.
  std::vector<int> sums(n, 0);
  for (const Bond &b : graph.bonds) {
    sums[b.begin] += valence_contribution(b.order);
    sums[b.end] += valence_contribution(b.order);
  }
  std::vector<char> need(n, 0);
  for (int a = 0; a < n; ++a) {
    const Atom &atom = graph.atoms[a];
    if (!atom.aromatic || !options.perceive_aromaticity) continue;
    auto nd = internal::needs_double(atom, sums[a] + atom.implicit_h);
    if (!nd) throw ValenceError("invalid valence on aromatic atom " + std::to_string(a));
    need[a] = *nd ? 1 : 0;
  }
  std::vector<int> candidates;
  RingSet rings = find_rings(n, graph.bonds);
  for (int b = 0; b < static_cast<int>(graph.bonds.size()); ++b)
    if (graph.bonds[b].order == BondOrder::kAromatic && rings.bond_in_ring[b]) candidates.push_back(b);
  for (int b = 0; b < static_cast<int>(graph.bonds.size()); ++b)
    if (graph.bonds[b].order == BondOrder::kAromatic && !rings.bond_in_ring[b]) candidates.push_back(b);
  std::vector<int> chosen;
  if (!internal::perfect_matching(n, graph.bonds, candidates, need, chosen))
    throw KekulizeError("cannot kekulize aromatic system");
  std::vector<Bond> kekule_bonds = graph.bonds;
  for (Bond &b : kekule_bonds)
    if (b.order == BondOrder::kAromatic) b.order = BondOrder::kSingle;
  for (int b : chosen) kekule_bonds[b].order = BondOrder::kDouble;

  // Valence check on the Kekule form.
  std::vector<int> ksum(n, 0);
  for (const Bond &b : kekule_bonds) {
    ksum[b.begin] += static_cast<int>(b.order);
    ksum[b.end] += static_cast<int>(b.order);
  }
  for (int a = 0; a < n; ++a) {
    const Atom &atom = graph.atoms[a];
    if (!is_allowed_valence(atom.element, atom.charge, ksum[a] + atom.implicit_h))
      throw ValenceError("invalid valence on atom " + std::to_string(a) + " (" +
                         std::string(element_symbol(atom.element)) + ")");
  }

  Molecule m;
  m.atoms_ = std::move(graph.atoms);
  m.kekule_.reserve(kekule_bonds.size());
  for (const Bond &b : kekule_bonds) m.kekule_.push_back(b.order);
  m.bonds_ = kekule_bonds;
  if (options.perceive_aromaticity) {
    std::vector<bool> arom = internal::perceive_aromaticity(m.atoms_, kekule_bonds, rings);
    for (Atom &a : m.atoms_) a.aromatic = false;
    for (std::size_t b = 0; b < m.bonds_.size(); ++b) {
      if (!arom[b]) continue;
      m.bonds_[b].order = BondOrder::kAromatic;
      m.atoms_[m.bonds_[b].begin].aromatic = true;
      m.atoms_[m.bonds_[b].end].aromatic = true;
    }
  }
  m.bond_in_ring_ = std::move(rings.bond_in_ring);
  m.atom_ring_count_ = std::move(rings.atom_ring_count);
  for (Ring &r : rings.sssr) m.sssr_.push_back(std::move(r.atoms));
  m.build_adjacency();
  return m;
}

void Molecule::build_adjacency() {
  const int n = num_atoms();
  adj_offset_.assign(n + 1, 0);
  for (const Bond &b : bonds_) {
    ++adj_offset_[b.begin + 1];
    ++adj_offset_[b.end + 1];
  }
  std::partial_sum(adj_offset_.begin(), adj_offset_.end(), adj_offset_.begin());
  adj_.assign(adj_offset_[n], Neighbor {0, 0});
  std::vector<int> fill(adj_offset_.begin(), adj_offset_.end() - 1);
  for (int i = 0; i < num_bonds(); ++i) {
    const Bond &b = bonds_[i];
    adj_[fill[b.begin]++] = {b.end, i};
    adj_[fill[b.end]++] = {b.begin, i};
  }
}

int Molecule::find_bond(int a, int b) const {
  for (const Neighbor &nb : neighbors(a))
    if (nb.atom == b) return nb.bond;
  return -1;
}

std::vector<std::vector<int>> Molecule::fragments() const {
  std::vector<int> comp(num_atoms(), -1);
  std::vector<std::vector<int>> out;
  for (int root = 0; root < num_atoms(); ++root) {
    if (comp[root] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack {root};
    comp[root] = id;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      out[id].push_back(a);
      for (const Neighbor &nb : neighbors(a)) {
        if (comp[nb.atom] >= 0) continue;
        comp[nb.atom] = id;
        stack.push_back(nb.atom);
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

int Molecule::num_fragments() const { return static_cast<int>(fragments().size()); }

MolGraph Molecule::to_graph(bool kekule) const {
  MolGraph g;
  g.atoms = atoms_;
  g.bonds = bonds_;
  if (kekule)
    for (std::size_t b = 0; b < g.bonds.size(); ++b) g.bonds[b].order = kekule_[b];
  return g;
}

int Molecule::kekule_valence(int atom) const {
  int sum = atoms_[atom].implicit_h;
  for (const Neighbor &nb : neighbors(atom)) sum += static_cast<int>(kekule_[nb.bond]);
  return sum;
}

Molecule kekulize(const Molecule &m) {
  return Molecule::from_graph(m.to_graph(true), BuildOptions {.perceive_aromaticity = false});
}

Molecule permute_atoms(const Molecule &m, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != m.num_atoms()) throw ChemError("permutation size mismatch");
  MolGraph g;
  g.atoms.resize(m.num_atoms());
  std::vector<char> used(m.num_atoms(), 0);
  for (int i = 0; i < m.num_atoms(); ++i) {
    if (perm[i] < 0 || perm[i] >= m.num_atoms() || used[perm[i]])
      throw ChemError("invalid permutation");
    used[perm[i]] = 1;
    g.atoms[perm[i]] = m.atom(i);
  }
  for (const Bond &b : m.bonds()) g.bonds.push_back({perm[b.begin], perm[b.end], b.order});
  return Molecule::from_graph(std::move(g));
}

}  // namespace brs
