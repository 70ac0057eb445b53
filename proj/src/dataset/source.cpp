//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/dataset/source.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "brs/molgraph/smiles.h"

namespace brs {

std::vector<int> default_element_allowlist() { return {6, 7, 8, 9, 16}; }

bool passes_allowlist(const Molecule &m, const std::vector<int> &allowlist) {
  for (const Atom &a : m.atoms()) {
    if (a.charge != 0 || a.isotope != 0) return false;
    if (std::find(allowlist.begin(), allowlist.end(), a.element) == allowlist.end()) return false;
  }
  return true;
}

std::vector<Molecule> load_molecules(const MoleculeSource &src, LoadStats *stats) {
  std::ifstream in(src.path);
  if (!in) throw DataError("cannot read molecule file " + src.path);
  LoadStats local;
  std::vector<Molecule> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string smiles;
    if (!(fields >> smiles)) continue;
    ++local.lines;
    Molecule m;
    try {
      m = parse_smiles(smiles);
    } catch (const ChemError &) {
      ++local.parse_errors;
      continue;
    }
    if (m.empty() || !passes_allowlist(m, src.element_allowlist)) {
      ++local.disallowed;
      continue;
    }
    ++local.kept;
    out.push_back(std::move(m));
  }
  if (stats != nullptr) *stats = local;
  return out;
}

}  // namespace brs
