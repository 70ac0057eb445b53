//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_MOLGRAPH_SMILES_H_
#define BRS_MOLGRAPH_SMILES_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "brs/molgraph/molecule.h"

namespace brs {

class SmilesParseError : public ChemError {
 public:
  SmilesParseError(const std::string &what, std::size_t offset)
      : ChemError(what + " at offset " + std::to_string(offset)), offset_(offset) { }

  // Byte offset into the input where parsing failed.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnsupportedElementError : public SmilesParseError {
 public:
  using SmilesParseError::SmilesParseError;
};

// Reads a SMILES string. Stereo marks and atom classes are accepted and
// ignored. Throws SmilesParseError, UnsupportedElementError, ValenceError or
// KekulizeError.
Molecule parse_smiles(std::string_view text);

// Writes m with depth-first traversal guided by priority (lower first):
// each fragment starts at its lowest-priority atom, and neighbors are
// visited in priority order. When order is non-null it receives the atoms
// in output order.
std::string write_smiles(const Molecule &m, const std::vector<int> &priority,
                         std::vector<int> *order = nullptr);

}  // namespace brs

#endif  // BRS_MOLGRAPH_SMILES_H_
