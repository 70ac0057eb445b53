//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_MOLGRAPH_CANONICAL_H_
#define BRS_MOLGRAPH_CANONICAL_H_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brs/molgraph/molecule.h"

namespace brs {

// Vertex-keyed, edge-labeled graph used by the canonical labeling core.
struct LabeledGraph {
  std::vector<std::int64_t> keys;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, label)

  int size() const { return static_cast<int>(keys.size()); }
};

using AtomText = std::function<std::string(int atom)>;
using BondText = std::function<std::string(int label)>;

// SMILES-style depth-first serialization of g. Fragments start at their
// lowest-priority vertex; branches follow neighbor priority; ring-closure
// digits take the lowest free number.
std::string write_dfs(const LabeledGraph &g, const std::vector<int> &priority,
                      const AtomText &atom_text, const BondText &bond_text,
                      std::vector<int> *order = nullptr);

// Canonical ranking: iterative refinement of the vertex keys followed by an
// individualization search that keeps the lexicographically smallest
// serialization produced by writer. Returns the winning ranks (a
// permutation of 0..n-1) and stores the winning string in best.
using LeafWriter = std::function<std::string(const std::vector<int> &ranks, std::vector<int> &order)>;
std::vector<int> canonical_ranks(const LabeledGraph &g, const LeafWriter &writer,
                                 std::string *best = nullptr);

// Molecule view used for ranking and writing: keys hold (element, charge,
// degree, hydrogens, aromatic, isotope); labels hold bond orders, with 5
// marking a single bond between two aromatic atoms.
LabeledGraph labeled_graph(const Molecule &m);

std::string write_canonical(const Molecule &m);

// SMILES from a seeded random traversal. The same seed yields the same
// string on every platform.
std::string randomized_smiles(const Molecule &m, std::uint64_t seed);

// parse_smiles followed by write_canonical.
std::string canonical_smiles(std::string_view smiles);

}  // namespace brs

#endif  // BRS_MOLGRAPH_CANONICAL_H_
