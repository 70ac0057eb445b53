//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <numeric>

#include "brs/molgraph/element.h"
#include "internal.h"

namespace brs::internal {
namespace {

constexpr int kNoContribution = -1;

// Pi electrons an atom donates to any ring it sits in, or kNoContribution
// when it cannot be part of an aromatic ring.
std::vector<int> electron_counts(std::span<const Atom> atoms, std::span<const Bond> bonds,
                                 const std::vector<bool> &bond_in_ring) {
  const int n = static_cast<int>(atoms.size());
  std::vector<int> degree(n, 0), valence(n, 0), ring_multiple(n, 0), exo_multiple(n, 0);
  std::vector<int> exo_partner(n, -1);
  for (std::size_t b = 0; b < bonds.size(); ++b) {
    const Bond &bd = bonds[b];
    const int order = static_cast<int>(bd.order);
    for (int a : {bd.begin, bd.end}) {
      ++degree[a];
      valence[a] += order;
    }
    if (order < 2) continue;
    if (bond_in_ring[b]) {
      ++ring_multiple[bd.begin];
      ++ring_multiple[bd.end];
    } else {
      const int weight = order == 3 ? 2 : 1;  // exocyclic triple disqualifies
      exo_multiple[bd.begin] += weight;
      exo_multiple[bd.end] += weight;
      exo_partner[bd.begin] = bd.end;
      exo_partner[bd.end] = bd.begin;
    }
  }
  std::vector<int> e(n, kNoContribution);
  for (int a = 0; a < n; ++a) {
    const Atom &atom = atoms[a];
    const int z = atom.element;
    if (z != 6 && z != 7 && z != 8 && z != 16) continue;
    if (ring_multiple[a] + exo_multiple[a] > 1) continue;
    // Hypervalent neutral atoms (S(IV), S(VI)) stay out of aromatic rings.
    if (atom.charge == 0 && valence[a] + atom.implicit_h != neutral_valences(z).front()) continue;
    if (ring_multiple[a] == 1) {
      e[a] = 1;
    } else if (exo_multiple[a] == 1) {
      const int partner = atoms[exo_partner[a]].element;
      // Exocyclic C=X with electronegative X pulls the pi electron out of
      // the ring; C=C keeps it.
      if (z == 6 && (partner == 7 || partner == 8 || partner == 16)) e[a] = 0;
      else if (z == 6 && partner == 6) e[a] = 1;
    } else if (atom.charge == 0) {
      if (z == 7 && degree[a] + atom.implicit_h == 3) e[a] = 2;
      if ((z == 8 || z == 16) && degree[a] == 2 && atom.implicit_h == 0) e[a] = 2;
    } else if (z == 6 && atom.charge == -1) {
      e[a] = 2;
    } else if (z == 6 && atom.charge == 1) {
      e[a] = 0;
    }
  }
  return e;
}

bool huckel(const Ring &ring, const std::vector<int> &e) {
  int sum = 0;
  for (int a : ring.atoms) {
    if (e[a] == kNoContribution) return false;
    sum += e[a];
  }
  return sum % 4 == 2;
}

// Cycle formed by two rings that share exactly one bond.
bool fuse(const Ring &r1, const Ring &r2, std::span<const Bond> bonds, Ring &out) {
  int shared = -1;
  for (int b : r1.bonds) {
    if (std::find(r2.bonds.begin(), r2.bonds.end(), b) == r2.bonds.end()) continue;
    if (shared >= 0) return false;
    shared = b;
  }
  if (shared < 0) return false;
  std::vector<int> atoms1(r1.atoms), atoms2(r2.atoms);
  std::sort(atoms1.begin(), atoms1.end());
  std::sort(atoms2.begin(), atoms2.end());
  std::vector<int> common;
  std::set_intersection(atoms1.begin(), atoms1.end(), atoms2.begin(), atoms2.end(),
                        std::back_inserter(common));
  if (common.size() != 2) return false;
  out.bonds.clear();
  out.atoms.clear();
  for (int b : r1.bonds)
    if (b != shared) out.bonds.push_back(b);
  for (int b : r2.bonds)
    if (b != shared) out.bonds.push_back(b);
  std::vector<int> atoms;
  for (int b : out.bonds) {
    atoms.push_back(bonds[b].begin);
    atoms.push_back(bonds[b].end);
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  out.atoms = std::move(atoms);  // membership only; order is not needed here
  return true;
}

// Drops aromatic components whose double-bond demand (as a SMILES reader
// would infer it from the lowercase form) cannot be met by aromatic bonds.
void enforce_readable(std::span<const Atom> atoms, std::span<const Bond> bonds,
                      std::vector<bool> &aromatic) {
  const int n = static_cast<int>(atoms.size());
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int a) {
    while (comp[a] != a) a = comp[a] = comp[comp[a]];
    return a;
  };
  std::vector<char> arom_atom(n, 0);
  for (std::size_t b = 0; b < bonds.size(); ++b) {
    if (!aromatic[b]) continue;
    arom_atom[bonds[b].begin] = arom_atom[bonds[b].end] = 1;
    comp[find(bonds[b].begin)] = find(bonds[b].end);
  }
  std::vector<int> sums(n, 0);
  for (std::size_t b = 0; b < bonds.size(); ++b) {
    const int c = aromatic[b] ? 1 : static_cast<int>(bonds[b].order);
    sums[bonds[b].begin] += c;
    sums[bonds[b].end] += c;
  }
  std::vector<char> need(n, 0), bad_root(n, 0);
  for (int a = 0; a < n; ++a) {
    if (!arom_atom[a]) continue;
    auto nd = needs_double(atoms[a], sums[a] + atoms[a].implicit_h);
    if (!nd) bad_root[find(a)] = 1;
    else need[a] = *nd ? 1 : 0;
  }
  std::vector<int> roots;
  for (int a = 0; a < n; ++a)
    if (arom_atom[a] && find(a) == a) roots.push_back(a);
  for (int root : roots) {
    bool ok = !bad_root[root];
    if (ok) {
      std::vector<char> need_here(n, 0);
      std::vector<int> cand;
      for (int a = 0; a < n; ++a)
        if (arom_atom[a] && find(a) == root) need_here[a] = need[a];
      for (std::size_t b = 0; b < bonds.size(); ++b)
        if (aromatic[b] && find(bonds[b].begin) == root) cand.push_back(static_cast<int>(b));
      std::vector<int> chosen;
      ok = perfect_matching(n, bonds, cand, need_here, chosen);
    }
    if (ok) continue;
    for (std::size_t b = 0; b < bonds.size(); ++b)
      if (aromatic[b] && find(bonds[b].begin) == root) aromatic[b] = false;
  }
}

}  // namespace

std::vector<bool> perceive_aromaticity(std::span<const Atom> atoms,
                                       std::span<const Bond> kekule_bonds,
                                       const RingSet &rings) {
  std::vector<bool> aromatic(kekule_bonds.size(), false);
  if (rings.relevant.empty()) return aromatic;
  const std::vector<int> e = electron_counts(atoms, kekule_bonds, rings.bond_in_ring);

  std::vector<char> ring_ok(rings.relevant.size(), 0);
  for (std::size_t i = 0; i < rings.relevant.size(); ++i) {
    if (!huckel(rings.relevant[i], e)) continue;
    ring_ok[i] = 1;
    for (int b : rings.relevant[i].bonds) aromatic[b] = true;
  }
  // Two-ring envelopes catch systems such as azulene whose rings are not
  // aromatic individually.
  Ring envelope;
  for (std::size_t i = 0; i < rings.relevant.size(); ++i) {
    for (std::size_t j = i + 1; j < rings.relevant.size(); ++j) {
      if (ring_ok[i] && ring_ok[j]) continue;
      if (!fuse(rings.relevant[i], rings.relevant[j], kekule_bonds, envelope)) continue;
      if (!huckel(envelope, e)) continue;
      for (int b : rings.relevant[i].bonds) aromatic[b] = true;
      for (int b : rings.relevant[j].bonds) aromatic[b] = true;
    }
  }
  // Ring triple bonds donate to the ring count but keep their own label.
  for (std::size_t b = 0; b < kekule_bonds.size(); ++b)
    if (kekule_bonds[b].order == BondOrder::kTriple) aromatic[b] = false;
  enforce_readable(atoms, kekule_bonds, aromatic);
  return aromatic;
}

}  // namespace brs::internal
