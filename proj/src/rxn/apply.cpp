//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/rxn/apply.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "brs/molgraph/canonical.h"
#include "brs/molgraph/element.h"

namespace brs {
namespace {

struct BondEdit {
  int lhs_a;
  int lhs_b;
  BondExpr rhs_kind;
  bool lhs_any;  // the reactant-side bond between the same maps is '~'
};

struct HydrogenCheck {
  int lhs_atom;
  Primitive prim;
};

// Template-level rewrite plan, independent of the reactants.
struct Plan {
  std::vector<char> survives;  // per lhs atom
  std::vector<BondEdit> edits;
  std::vector<std::pair<int, int>> removals;  // lhs atom pairs
  std::vector<HydrogenCheck> checks;

  explicit Plan(const SmartsReaction &r) : survives(r.lhs.num_atoms(), 0) {
    std::vector<int> rhs_to_lhs(r.rhs.num_atoms(), -1);
    for (const auto &[l, rr] : r.map_table) {
      survives[l] = 1;
      rhs_to_lhs[rr] = l;
    }
    for (const PatternBond &b : r.rhs.bonds) {
      const int la = rhs_to_lhs[b.begin], lb = rhs_to_lhs[b.end];
      const int lhs_bond = r.lhs.find_bond(la, lb);
      edits.push_back({la, lb, b.kind, lhs_bond >= 0 && r.lhs.bonds[lhs_bond].kind == BondExpr::kAny});
    }
    for (const PatternBond &b : r.lhs.bonds) {
      if (!survives[b.begin] || !survives[b.end]) continue;
      const int ra = r.rhs.find_map(r.lhs.atoms[b.begin].map);
      const int rb = r.rhs.find_map(r.lhs.atoms[b.end].map);
      if (r.rhs.find_bond(ra, rb) < 0) removals.push_back({b.begin, b.end});
    }
    for (int i = 0; i < r.rhs.num_atoms(); ++i)
      for (const Primitive &p : r.rhs.atoms[i].and_terms)
        if (p.kind == PrimitiveKind::kHydrogen) checks.push_back({rhs_to_lhs[i], p});
  }
};

// Kekule union of the reactants with liveness flags on bonds.
struct WorkGraph {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  std::vector<char> alive;
  std::vector<char> was_aromatic;

  int find_bond(int a, int b) const {
    for (int i = 0; i < static_cast<int>(bonds.size()); ++i)
      if (alive[i] && ((bonds[i].begin == a && bonds[i].end == b) || (bonds[i].begin == b && bonds[i].end == a)))
        return i;
    return -1;
  }

  int bond_sum(int a) const {
    int s = 0;
    for (std::size_t i = 0; i < bonds.size(); ++i)
      if (alive[i] && (bonds[i].begin == a || bonds[i].end == a)) s += static_cast<int>(bonds[i].order);
    return s;
  }

  // Sets implicit hydrogens from the valence table; false when no valence fits.
  bool recompute_h(int a) {
    const int sum = bond_sum(a);
    auto v = default_valence(atoms[a].element, atoms[a].charge, sum);
    if (!v) return false;
    atoms[a].implicit_h = *v - sum;
    return true;
  }

  std::vector<int> components() const {
    std::vector<int> parent(atoms.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (std::size_t i = 0; i < bonds.size(); ++i)
      if (alive[i]) parent[find(bonds[i].begin)] = find(bonds[i].end);
    std::vector<int> out(atoms.size());
    for (std::size_t a = 0; a < atoms.size(); ++a) out[a] = find(static_cast<int>(a));
    return out;
  }

  // Molecule made of the atoms with keep[a] set.
  std::optional<Molecule> extract(const std::vector<char> &keep) const {
    std::vector<int> index(atoms.size(), -1);
    MolGraph g;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      if (!keep[a]) continue;
      index[a] = g.add_atom(atoms[a]);
    }
    for (std::size_t i = 0; i < bonds.size(); ++i) {
      if (!alive[i] || index[bonds[i].begin] < 0 || index[bonds[i].end] < 0) continue;
      g.add_bond(index[bonds[i].begin], index[bonds[i].end], bonds[i].order);
    }
    try {
      return Molecule::from_graph(std::move(g));
    } catch (const ChemError &) {
      return std::nullopt;
    }
  }
};

WorkGraph union_graph(std::span<const Molecule> mols, std::vector<int> &offsets) {
  WorkGraph w;
  offsets.clear();
  for (const Molecule &m : mols) {
    const int base = static_cast<int>(w.atoms.size());
    offsets.push_back(base);
    for (Atom a : m.atoms()) {
      a.aromatic = false;
      w.atoms.push_back(a);
    }
    for (int b = 0; b < m.num_bonds(); ++b) {
      const Bond &bd = m.bond(b);
      w.bonds.push_back({bd.begin + base, bd.end + base, m.kekule_order(b)});
      w.alive.push_back(1);
      w.was_aromatic.push_back(bd.order == BondOrder::kAromatic);
    }
  }
  return w;
}

struct Outcome {
  Molecule product;
  std::vector<std::string> discarded;
};

std::optional<Outcome> rewrite(const Plan &plan, const WorkGraph &base, const std::vector<int> &image,
                               bool keep_discarded) {
  WorkGraph w = base;
  const int n_lhs = static_cast<int>(image.size());

  for (const BondEdit &e : plan.edits) {
    const int a = image[e.lhs_a], b = image[e.lhs_b];
    const int bond = w.find_bond(a, b);
    BondOrder explicit_order = BondOrder::kSingle;
    const bool is_explicit = e.rhs_kind == BondExpr::kSingle || e.rhs_kind == BondExpr::kDouble ||
                             e.rhs_kind == BondExpr::kTriple;
    if (e.rhs_kind == BondExpr::kDouble) explicit_order = BondOrder::kDouble;
    if (e.rhs_kind == BondExpr::kTriple) explicit_order = BondOrder::kTriple;
    if (bond < 0) {
      w.bonds.push_back({a, b, explicit_order});
      w.alive.push_back(1);
      w.was_aromatic.push_back(0);
      continue;
    }
    if (is_explicit) {
      w.bonds[bond].order = explicit_order;
    } else if (e.rhs_kind == BondExpr::kUnspecified && !e.lhs_any &&
               w.bonds[bond].order != BondOrder::kSingle && !w.was_aromatic[bond]) {
      w.bonds[bond].order = BondOrder::kSingle;
    }
  }
  for (const auto &[la, lb] : plan.removals) {
    const int bond = w.find_bond(image[la], image[lb]);
    if (bond >= 0) w.alive[bond] = 0;
  }

  std::vector<char> deleted(w.atoms.size(), 0), surviving(w.atoms.size(), 0);
  for (int i = 0; i < n_lhs; ++i) (plan.survives[i] ? surviving : deleted)[image[i]] = 1;

  // Side channel: cut deleted atoms away from surviving ones only.
  std::vector<std::string> discarded;
  if (keep_discarded) {
    WorkGraph side = w;
    std::set<int> cut_atoms;
    for (std::size_t i = 0; i < side.bonds.size(); ++i) {
      if (!side.alive[i]) continue;
      const int a = side.bonds[i].begin, b = side.bonds[i].end;
      if ((deleted[a] && surviving[b]) || (deleted[b] && surviving[a])) {
        side.alive[i] = 0;
        cut_atoms.insert(deleted[a] ? a : b);
      }
    }
    const std::vector<int> comp = side.components();
    std::set<int> with_deleted, with_survivor;
    for (std::size_t a = 0; a < side.atoms.size(); ++a) {
      if (deleted[a]) with_deleted.insert(comp[a]);
      if (surviving[a]) with_survivor.insert(comp[a]);
    }
    bool ok = true;
    for (int a : cut_atoms)
      if (!with_survivor.count(comp[a]) && !side.recompute_h(a)) ok = false;
    if (ok) {
      for (int root : with_deleted) {
        if (with_survivor.count(root)) continue;
        std::vector<char> keep(side.atoms.size(), 0);
        for (std::size_t a = 0; a < side.atoms.size(); ++a) keep[a] = comp[a] == root;
        if (auto frag = side.extract(keep)) discarded.push_back(write_canonical(*frag));
      }
    }
  }

  std::set<int> touched;
  for (int i = 0; i < n_lhs; ++i)
    if (plan.survives[i]) touched.insert(image[i]);
  for (std::size_t i = 0; i < w.bonds.size(); ++i) {
    if (!w.alive[i]) continue;
    const int a = w.bonds[i].begin, b = w.bonds[i].end;
    if (!deleted[a] && !deleted[b]) continue;
    if (!deleted[a]) touched.insert(a);
    if (!deleted[b]) touched.insert(b);
    w.alive[i] = 0;
  }
  for (int a : touched)
    if (!w.recompute_h(a)) return std::nullopt;
  for (const HydrogenCheck &c : plan.checks)
    if (!primitive_matches(c.prim, w.atoms[image[c.lhs_atom]])) return std::nullopt;

  const std::vector<int> comp = w.components();
  std::set<int> kept_roots;
  for (int i = 0; i < n_lhs; ++i)
    if (plan.survives[i]) kept_roots.insert(comp[image[i]]);
  std::vector<char> keep(w.atoms.size(), 0);
  for (std::size_t a = 0; a < w.atoms.size(); ++a) keep[a] = !deleted[a] && kept_roots.count(comp[a]) > 0;
  auto product = w.extract(keep);
  if (!product) return std::nullopt;
  return Outcome {std::move(*product), std::move(discarded)};
}

}  // namespace

std::vector<Product> apply_reaction(const SmartsReaction &r, std::span<const Molecule> reactants,
                                    const ApplyOptions &options) {
  std::vector<Product> out;
  if (reactants.empty()) return out;
  const std::vector<Embedding> embeddings = match(r.lhs, reactants, options.mode);
  if (embeddings.empty()) return out;
  const Plan plan(r);
  std::vector<int> offsets;
  const WorkGraph base = union_graph(reactants, offsets);

  std::map<std::string, Product> unique;
  std::vector<int> image(r.lhs.num_atoms());
  for (const Embedding &e : embeddings) {
    for (int i = 0; i < r.lhs.num_atoms(); ++i) image[i] = offsets[e.assignment[i].mol] + e.assignment[i].atom;
    auto outcome = rewrite(plan, base, image, options.keep_discarded);
    if (!outcome || outcome->product.empty()) continue;
    std::string smiles = write_canonical(outcome->product);
    auto it = unique.find(smiles);
    if (it == unique.end()) {
      it = unique.emplace(smiles, Product {smiles, std::move(outcome->product), {}}).first;
    }
    auto &d = it->second.discarded;
    d.insert(d.end(), outcome->discarded.begin(), outcome->discarded.end());
  }
  for (auto &[smiles, p] : unique) {
    std::sort(p.discarded.begin(), p.discarded.end());
    p.discarded.erase(std::unique(p.discarded.begin(), p.discarded.end()), p.discarded.end());
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::string> apply(const SmartsReaction &r, std::span<const Molecule> reactants, MatchMode mode) {
  std::vector<std::string> out;
  for (Product &p : apply_reaction(r, reactants, {mode, false})) out.push_back(std::move(p.smiles));
  return out;
}

}  // namespace brs
