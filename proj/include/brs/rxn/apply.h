//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_RXN_APPLY_H_
#define BRS_RXN_APPLY_H_

#include <span>
#include <string>
#include <vector>

#include "brs/molgraph/molecule.h"
#include "brs/rxn/reaction.h"
#include "brs/smarts/match.h"

namespace brs {

struct ApplyOptions {
  MatchMode mode = MatchMode::kIntra;
  // Also report the fragments split off from the reactants (components
  // holding deleted atoms and no surviving mapped atom).
  bool keep_discarded = false;
};

struct Product {
  std::string smiles;  // canonical; '.'-joined when several fragments are kept
  Molecule molecule;
  // Canonical SMILES of discarded fragments over all embeddings giving this
  // product, sorted and unique. Filled only with keep_discarded.
  std::vector<std::string> discarded;
};

// Every distinct product of r over all embeddings of its LHS, sorted by
// canonical SMILES.
std::vector<Product> apply_reaction(const SmartsReaction &r, std::span<const Molecule> reactants,
                                    const ApplyOptions &options = {});

// Canonical product SMILES only.
std::vector<std::string> apply(const SmartsReaction &r, std::span<const Molecule> reactants,
                               MatchMode mode = MatchMode::kIntra);

}  // namespace brs

#endif  // BRS_RXN_APPLY_H_
