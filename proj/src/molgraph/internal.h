//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_SRC_MOLGRAPH_INTERNAL_H_
#define BRS_SRC_MOLGRAPH_INTERNAL_H_

#include <optional>
#include <span>
#include <vector>

#include "brs/molgraph/molecule.h"
#include "brs/molgraph/rings.h"

namespace brs::internal {

// Whether an aromatic atom must receive one double bond from its aromatic
// bonds, given the valence sum with aromatic bonds counted as one and the
// hydrogen count. nullopt when neither reading gives an allowed valence.
std::optional<bool> needs_double(const Atom &atom, int sum_with_h);

// Chooses a set of candidate bonds that covers every atom with need[a] set
// exactly once (endpoints of chosen bonds must both need a double).
// Returns false when no such set exists.
bool perfect_matching(int num_atoms, std::span<const Bond> bonds,
                      std::span<const int> candidate_bonds, const std::vector<char> &need,
                      std::vector<int> &chosen);

// Aromatic flag per bond, computed on a Kekule graph (no aromatic orders).
std::vector<bool> perceive_aromaticity(std::span<const Atom> atoms,
                                       std::span<const Bond> kekule_bonds,
                                       const RingSet &rings);

}  // namespace brs::internal

#endif  // BRS_SRC_MOLGRAPH_INTERNAL_H_
