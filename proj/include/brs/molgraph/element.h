//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_MOLGRAPH_ELEMENT_H_
#define BRS_MOLGRAPH_ELEMENT_H_

#include <optional>
#include <span>
#include <string_view>

namespace brs {

// Atomic number of a (case-sensitive) element symbol, or 0 when the symbol
// is not supported.
int atomic_number(std::string_view symbol);

std::string_view element_symbol(int atomic_number);

bool is_supported_element(int atomic_number);

// B, C, N, O, P, S, F, Cl, Br, I: may appear outside brackets in SMILES.
bool is_organic_subset(int atomic_number);

// Elements that may be written as lowercase aromatic atoms.
bool can_be_aromatic(int atomic_number);

// Allowed total valences (bond orders plus hydrogens) of a neutral atom, in
// increasing order.
std::span<const int> neutral_valences(int atomic_number);

// Smallest allowed valence of (element, charge) that is >= used, if any.
std::optional<int> default_valence(int atomic_number, int charge, int used);

// True when used is exactly one of the allowed valences of (element, charge).
bool is_allowed_valence(int atomic_number, int charge, int used);

}  // namespace brs

#endif  // BRS_MOLGRAPH_ELEMENT_H_
