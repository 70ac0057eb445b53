//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/dataset/scaffold.h"

#include <algorithm>
#include <fstream>

#include "brs/dataset/source.h"
#include "brs/molgraph/canonical.h"
#include "brs/molgraph/rings.h"

namespace brs {
namespace {

int system_bond_label(const Molecule &m, int bond) {
  const BondOrder order = m.bond(bond).order;
  return static_cast<int>(order);  // 1..3, 4 for aromatic
}

std::string system_bond_text(int label) {
  switch (label) {
    case 2: return "=";
    case 3: return "#";
    case 4: return ":";
    default: return "";
  }
}

}  // namespace

std::vector<std::string> scaffold_signatures(const Molecule &m) {
  std::vector<bool> in_ring(m.num_bonds());
  for (int b = 0; b < m.num_bonds(); ++b) in_ring[b] = m.bond_in_ring(b);
  std::vector<std::string> out;
  for (const std::vector<int> &system : ring_systems(m.num_atoms(), m.bonds(), in_ring)) {
    std::vector<int> local(m.num_atoms(), -1);
    for (std::size_t i = 0; i < system.size(); ++i) local[system[i]] = static_cast<int>(i);
    LabeledGraph g;
    g.keys.assign(system.size(), 0);
    g.adj.resize(system.size());
    for (int b = 0; b < m.num_bonds(); ++b) {
      if (!in_ring[b]) continue;
      const Bond &bond = m.bond(b);
      const int u = local[bond.begin], v = local[bond.end];
      if (u < 0 || v < 0) continue;
      const int label = system_bond_label(m, b);
      g.adj[u].push_back({v, label});
      g.adj[v].push_back({u, label});
    }
    const AtomText atom_text = [](int) { return std::string("C"); };
    std::string best;
    canonical_ranks(
        g,
        [&](const std::vector<int> &ranks, std::vector<int> &order) {
          return write_dfs(g, ranks, atom_text, system_bond_text, &order);
        },
        &best);
    out.push_back(std::move(best));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ScaffoldSet build_scaffold_allowlist(std::span<const Molecule> mols) {
  ScaffoldSet out;
  for (const Molecule &m : mols)
    for (std::string &s : scaffold_signatures(m)) out.insert(std::move(s));
  return out;
}

ScaffoldSet load_scaffold_allowlist(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read allowlist file " + path);
  ScaffoldSet out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) out.insert(line);
  }
  return out;
}

void save_scaffold_allowlist(const ScaffoldSet &s, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write allowlist file " + path);
  for (const std::string &sig : s) out << sig << '\n';
}

}  // namespace brs
