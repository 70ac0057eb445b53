//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_MOLGRAPH_RINGS_H_
#define BRS_MOLGRAPH_RINGS_H_

#include <span>
#include <vector>

#include "brs/molgraph/molecule.h"

namespace brs {

struct Ring {
  std::vector<int> atoms;  // cyclic order
  std::vector<int> bonds;  // bonds[i] joins atoms[i] and atoms[i + 1]
};

struct RingSet {
  // A minimum cycle basis (Horton candidates, greedy GF(2) selection).
  std::vector<Ring> sssr;
  // Every cycle that belongs to at least one minimum cycle basis. This set
  // does not depend on atom numbering, unlike sssr.
  std::vector<Ring> relevant;
  std::vector<bool> bond_in_ring;
  std::vector<int> atom_ring_count;  // number of sssr rings per atom
};

RingSet find_rings(int num_atoms, std::span<const Bond> bonds);

// Connected components of the ring-bond subgraph: each entry lists the atoms
// of one fused (or spiro-joined) ring system.
std::vector<std::vector<int>> ring_systems(int num_atoms, std::span<const Bond> bonds,
                                           const std::vector<bool> &bond_in_ring);

}  // namespace brs

#endif  // BRS_MOLGRAPH_RINGS_H_
