//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_DATASET_SOURCE_H_
#define BRS_DATASET_SOURCE_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "brs/molgraph/molecule.h"

namespace brs {

// Bad or missing input data (as opposed to a usage error).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> default_element_allowlist();  // C, N, O, F, S

struct MoleculeSource {
  std::string name;
  std::string path;
  std::vector<int> element_allowlist = default_element_allowlist();
};

struct LoadStats {
  std::size_t lines = 0;  // non-blank
  std::size_t kept = 0;
  std::size_t parse_errors = 0;
  std::size_t disallowed = 0;  // element, charge or isotope
};

// Neutral, no isotope labels, every atom in the allowlist.
bool passes_allowlist(const Molecule &m, const std::vector<int> &allowlist);

// One SMILES per line, optional whitespace-separated id after it. Blank
// lines are ignored. Throws DataError when the file cannot be read.
std::vector<Molecule> load_molecules(const MoleculeSource &src, LoadStats *stats = nullptr);

}  // namespace brs

#endif  // BRS_DATASET_SOURCE_H_
