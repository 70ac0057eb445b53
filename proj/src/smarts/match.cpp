//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/smarts/match.h"

#include <algorithm>
#include <functional>

namespace brs {

bool primitive_matches(const Primitive &p, const Atom &atom) {
  switch (p.kind) {
  case PrimitiveKind::kAtomicNumber:
    return atom.element == p.value;
  case PrimitiveKind::kAliphatic:
    return atom.element == p.value && !atom.aromatic;
  case PrimitiveKind::kAromatic:
    return atom.element == p.value && atom.aromatic;
  case PrimitiveKind::kWildcard:
    return true;
  case PrimitiveKind::kHydrogen:
    return p.value < 0 ? atom.implicit_h >= 1 : atom.implicit_h == p.value;
  }
  return false;
}

bool atom_matches(const AtomExpr &e, const Atom &atom) {
  if (!e.or_terms.empty() &&
      std::none_of(e.or_terms.begin(), e.or_terms.end(),
                   [&](const Primitive &p) { return primitive_matches(p, atom); }))
    return false;
  return std::all_of(e.and_terms.begin(), e.and_terms.end(),
                     [&](const Primitive &p) { return primitive_matches(p, atom); });
}

bool bond_matches(BondExpr kind, BondOrder order) {
  switch (kind) {
  case BondExpr::kUnspecified:
    return order == BondOrder::kSingle || order == BondOrder::kAromatic;
  case BondExpr::kSingle:
    return order == BondOrder::kSingle;
  case BondExpr::kDouble:
    return order == BondOrder::kDouble;
  case BondExpr::kTriple:
    return order == BondOrder::kTriple;
  case BondExpr::kAny:
    return true;
  }
  return false;
}

namespace {

struct Step {
  int atom;    // pattern atom
  int anchor;  // earlier pattern atom it is bonded to (-1 for the root)
  std::vector<std::pair<int, BondExpr>> back_bonds;  // earlier neighbors
};

// Search plan for one connected component: most constrained atom first,
// then neighbor expansion preferring atoms with fewer candidates.
std::vector<Step> plan(const PatternGraph &p, const PatternComponent &comp, const Molecule &m) {
  std::vector<int> candidates(p.num_atoms(), 0);
  for (int a : comp.atoms)
    for (const Atom &atom : m.atoms())
      if (atom_matches(p.atoms[a], atom)) ++candidates[a];

  std::vector<std::vector<std::pair<int, BondExpr>>> adj(p.num_atoms());
  for (const PatternBond &b : p.bonds) {
    adj[b.begin].push_back({b.end, b.kind});
    adj[b.end].push_back({b.begin, b.kind});
  }
  std::vector<char> placed(p.num_atoms(), 0);
  std::vector<Step> steps;
  while (steps.size() < comp.atoms.size()) {
    int best = -1;
    for (int a : comp.atoms) {
      if (placed[a]) continue;
      bool frontier = steps.empty() ||
                      std::any_of(adj[a].begin(), adj[a].end(), [&](const auto &e) { return placed[e.first]; });
      if (!frontier) continue;
      if (best < 0 || candidates[a] < candidates[best]) best = a;
    }
    Step s {best, -1, {}};
    for (const auto &[nb, kind] : adj[best]) {
      if (!placed[nb]) continue;
      if (s.anchor < 0) s.anchor = nb;
      s.back_bonds.push_back({nb, kind});
    }
    placed[best] = 1;
    steps.push_back(std::move(s));
  }
  return steps;
}

void match_component(const PatternGraph &p, const PatternComponent &comp, const Molecule &m,
                     std::vector<std::vector<int>> &out) {
  if (comp.atoms.empty() || m.empty()) return;
  const std::vector<Step> steps = plan(p, comp, m);
  std::vector<int> image(p.num_atoms(), -1);
  std::vector<char> used(m.num_atoms(), 0);

  std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == steps.size()) {
      std::vector<int> hit;
      hit.reserve(comp.atoms.size());
      for (int a : comp.atoms) hit.push_back(image[a]);
      out.push_back(std::move(hit));
      return;
    }
    const Step &s = steps[depth];
    auto try_atom = [&](int cand) {
      if (used[cand] || !atom_matches(p.atoms[s.atom], m.atom(cand))) return;
      for (const auto &[q, kind] : s.back_bonds) {
        const int b = m.find_bond(cand, image[q]);
        if (b < 0 || !bond_matches(kind, m.bond(b).order)) return;
      }
      image[s.atom] = cand;
      used[cand] = 1;
      extend(depth + 1);
      used[cand] = 0;
      image[s.atom] = -1;
    };
    if (s.anchor < 0) {
      for (int cand = 0; cand < m.num_atoms(); ++cand) try_atom(cand);
    } else {
      for (const Neighbor &nb : m.neighbors(image[s.anchor])) try_atom(nb.atom);
    }
  };
  extend(0);
}

}  // namespace

std::vector<Embedding> match(const PatternGraph &p, std::span<const Molecule> mols, MatchMode mode) {
  std::vector<Embedding> out;
  const int nc = p.num_components();
  const int nm = static_cast<int>(mols.size());
  if (nc == 0 || nm == 0) return out;
  if (mode == MatchMode::kInter && nc > nm) return out;

  // hits[c][k]: embeddings of component c into molecule k.
  std::vector<std::vector<std::vector<std::vector<int>>>> hits(nc, std::vector<std::vector<std::vector<int>>>(nm));
  for (int c = 0; c < nc; ++c)
    for (int k = 0; k < nm; ++k) match_component(p, p.components[c], mols[k], hits[c][k]);

  std::vector<std::vector<char>> used(nm);
  for (int k = 0; k < nm; ++k) used[k].assign(mols[k].num_atoms(), 0);
  std::vector<char> mol_taken(nm, 0);
  Embedding current;
  current.assignment.assign(p.num_atoms(), AtomRef {-1, -1});

  std::function<void(int)> place = [&](int c) {
    if (c == nc) {
      out.push_back(current);
      return;
    }
    const auto &atoms = p.components[c].atoms;
    for (int k = 0; k < nm; ++k) {
      if (mode == MatchMode::kInter && mol_taken[k]) continue;
      for (const auto &hit : hits[c][k]) {
        if (std::any_of(hit.begin(), hit.end(), [&](int a) { return used[k][a] != 0; })) continue;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
          current.assignment[atoms[i]] = {k, hit[i]};
          used[k][hit[i]] = 1;
        }
        mol_taken[k] = 1;
        place(c + 1);
        mol_taken[k] = 0;
        for (int a : hit) used[k][a] = 0;
      }
    }
  };
  place(0);
  return out;
}

}  // namespace brs
