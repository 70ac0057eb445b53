//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <numeric>

#include "brs/molgraph/canonical.h"
#include "brs/molgraph/element.h"
#include "brs/molgraph/smiles.h"
#include "brs/util/random.h"

namespace brs {
namespace {

constexpr int kAromaticSingle = 5;

int bond_label(const Molecule &m, const Bond &b) {
  if (b.order == BondOrder::kSingle && m.atom(b.begin).aromatic && m.atom(b.end).aromatic)
    return kAromaticSingle;
  return static_cast<int>(b.order);
}

std::string bond_text(int label) {
  switch (label) {
  case 2:
    return "=";
  case 3:
    return "#";
  case kAromaticSingle:
    return "-";
  default:
    return "";
  }
}

// Hydrogen count a SMILES reader infers for a bare (unbracketed) atom, or -1
// when no valence fits.
int inferred_hydrogens(const Atom &atom, int sum) {
  auto v = default_valence(atom.element, 0, sum);
  if (!v) return -1;
  if (!atom.aromatic) return *v - sum;
  return *v - sum >= 1 ? *v - sum - 1 : 0;
}

std::string atom_text(const Molecule &m, int a) {
  const Atom &atom = m.atom(a);
  int sum = 0;
  for (const Neighbor &nb : m.neighbors(a)) sum += valence_contribution(m.bond(nb.bond).order);
  std::string symbol(element_symbol(atom.element));
  if (atom.aromatic) symbol[0] = static_cast<char>(symbol[0] - 'A' + 'a');
  const bool bare = is_organic_subset(atom.element) && atom.charge == 0 && atom.isotope == 0 &&
                    inferred_hydrogens(atom, sum) == atom.implicit_h;
  if (bare) return symbol;
  std::string out = "[";
  if (atom.isotope > 0) out += std::to_string(atom.isotope);
  out += symbol;
  if (atom.implicit_h > 0) {
    out += 'H';
    if (atom.implicit_h > 1) out += std::to_string(atom.implicit_h);
  }
  if (atom.charge != 0) {
    out += atom.charge > 0 ? '+' : '-';
    if (std::abs(atom.charge) > 1) out += std::to_string(std::abs(atom.charge));
  }
  out += ']';
  return out;
}

}  // namespace

LabeledGraph labeled_graph(const Molecule &m) {
  LabeledGraph g;
  g.keys.resize(m.num_atoms());
  g.adj.resize(m.num_atoms());
  for (int a = 0; a < m.num_atoms(); ++a) {
    const Atom &atom = m.atom(a);
    std::int64_t key = atom.element;
    key = key * 32 + (atom.charge + 16);
    key = key * 16 + m.degree(a);
    key = key * 16 + atom.implicit_h;
    key = key * 2 + (atom.aromatic ? 1 : 0);
    key = key * 1024 + atom.isotope;
    g.keys[a] = key;
    for (const Neighbor &nb : m.neighbors(a))
      g.adj[a].push_back({nb.atom, bond_label(m, m.bond(nb.bond))});
  }
  return g;
}

std::string write_smiles(const Molecule &m, const std::vector<int> &priority,
                         std::vector<int> *order) {
  return write_dfs(
      labeled_graph(m), priority, [&m](int a) { return atom_text(m, a); }, bond_text, order);
}

std::string write_canonical(const Molecule &m) {
  if (m.empty()) return "";
  const LabeledGraph g = labeled_graph(m);
  const AtomText atoms = [&m](int a) { return atom_text(m, a); };
  std::string best;
  canonical_ranks(
      g,
      [&](const std::vector<int> &ranks, std::vector<int> &order) {
        return write_dfs(g, ranks, atoms, bond_text, &order);
      },
      &best);
  return best;
}

std::string randomized_smiles(const Molecule &m, std::uint64_t seed) {
  std::vector<int> priority(m.num_atoms());
  std::iota(priority.begin(), priority.end(), 0);
  Rng rng(seed);
  seeded_shuffle(priority, rng);
  return write_smiles(m, priority);
}

}  // namespace brs
