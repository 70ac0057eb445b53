//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <iterator>
#include <string_view>

#include "brs/augment/augment.h"
#include "brs/molgraph/smiles.h"

namespace brs {
namespace {

constexpr std::string_view kProbeSmiles[] = {
    // acyclic
    "CCO", "CC=O", "CCN", "CC#N", "C=CC", "CC#C", "CCCCCC", "CCCCCCCC", "OCCCCO", "NCCCCN",
    "CC(C)O", "CNC", "COC", "CCF", "CCS", "CSC", "C=O", "CN", "NN", "CO",
    "C#N", "C=CC=C", "NC(C)=O", "CC(=O)O", "OCC(O)CO", "CC=CC", "C=CCC=C", "N#CCC#N", "CCCCCCC(N)=O",
    "CN=C",
    // aliphatic rings, sizes 3-8
    "C1CC1", "C1CCC1", "C1CCCC1", "C1CCCCC1", "C1CCCCCC1", "C1CCCCCCC1", "C1=CCCC1", "C1=CCCCC1",
    "O=C1CCCC1", "C1CCNCC1", "C1CCOC1",
    // aromatic rings
    "c1ccccc1", "Cc1ccccc1", "Oc1ccccc1", "c1ccncc1", "c1ccoc1", "c1cc[nH]c1", "c1ccsc1",
    "Cc1ccc(O)cc1", "c1ccc2ccccc2c1",
};

static_assert(std::size(kProbeSmiles) == 50);

}  // namespace

const std::vector<Molecule> &probe_molecules() {
  static const std::vector<Molecule> mols = [] {
    std::vector<Molecule> out;
    for (std::string_view s : kProbeSmiles) out.push_back(parse_smiles(s));
    return out;
  }();
  return mols;
}

}  // namespace brs
