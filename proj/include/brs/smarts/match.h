//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_SMARTS_MATCH_H_
#define BRS_SMARTS_MATCH_H_

#include <span>
#include <utility>
#include <vector>

#include "brs/molgraph/molecule.h"
#include "brs/smarts/pattern.h"

namespace brs {

enum class MatchMode {
  kIntra,  // components bind any molecules, atom-disjoint
  kInter,  // each component binds a distinct molecule
};

struct AtomRef {
  int mol = 0;
  int atom = 0;

  bool operator==(const AtomRef &) const = default;
  auto operator<=>(const AtomRef &) const = default;
};

// Image of each pattern atom, indexed like PatternGraph::atoms.
struct Embedding {
  std::vector<AtomRef> assignment;

  bool operator==(const Embedding &) const = default;
};

bool primitive_matches(const Primitive &p, const Atom &atom);
bool atom_matches(const AtomExpr &e, const Atom &atom);
bool bond_matches(BondExpr kind, BondOrder order);

// All embeddings of p into mols, in deterministic search order.
std::vector<Embedding> match(const PatternGraph &p, std::span<const Molecule> mols,
                             MatchMode mode = MatchMode::kIntra);

}  // namespace brs

#endif  // BRS_SMARTS_MATCH_H_
