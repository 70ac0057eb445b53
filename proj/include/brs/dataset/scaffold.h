//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_DATASET_SCAFFOLD_H_
#define BRS_DATASET_SCAFFOLD_H_

#include <set>
#include <span>
#include <string>
#include <vector>

#include "brs/molgraph/molecule.h"

namespace brs {

using ScaffoldSet = std::set<std::string>;

// One signature per ring system (ring atoms joined by ring bonds; spiro
// systems stay together). Every atom is written as C, bonds keep their
// order and aromatic bonds are written ':'. Sorted, may repeat.
std::vector<std::string> scaffold_signatures(const Molecule &m);

ScaffoldSet build_scaffold_allowlist(std::span<const Molecule> mols);

// One signature per line.
ScaffoldSet load_scaffold_allowlist(const std::string &path);
void save_scaffold_allowlist(const ScaffoldSet &s, const std::string &path);

}  // namespace brs

#endif  // BRS_DATASET_SCAFFOLD_H_
