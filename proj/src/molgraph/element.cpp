//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/molgraph/element.h"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <vector>

namespace brs {
namespace {

struct ElementData {
  int atomic_number;
  std::string_view symbol;
  std::array<int, 3> valences;  // zero-padded
  bool organic;
  bool aromatic;
  bool electron_donor_shift;  // charge raises valence (groups 15-17)
};

constexpr std::array kElements = {
    ElementData {1, "H", {1, 0, 0}, false, false, false},
    ElementData {5, "B", {3, 0, 0}, true, true, false},
    ElementData {6, "C", {4, 0, 0}, true, true, false},
    ElementData {7, "N", {3, 0, 0}, true, true, true},
    ElementData {8, "O", {2, 0, 0}, true, true, true},
    ElementData {9, "F", {1, 0, 0}, true, false, true},
    ElementData {14, "Si", {4, 0, 0}, false, false, false},
    ElementData {15, "P", {3, 5, 0}, true, true, true},
    ElementData {16, "S", {2, 4, 6}, true, true, true},
    ElementData {17, "Cl", {1, 0, 0}, true, false, true},
    ElementData {33, "As", {3, 5, 0}, false, true, true},
    ElementData {34, "Se", {2, 4, 6}, false, true, true},
    ElementData {35, "Br", {1, 0, 0}, true, false, true},
    ElementData {53, "I", {1, 0, 0}, true, false, true},
};

const ElementData *find(int z) {
  auto it = std::find_if(kElements.begin(), kElements.end(),
                         [z](const ElementData &e) { return e.atomic_number == z; });
  return it == kElements.end() ? nullptr : &*it;
}

// Valence list of a charged atom, derived from the isoelectronic neutral
// configuration: N+ behaves like C, O- like F, C- like N, C+ like B.
std::vector<int> charged_valences(const ElementData &e, int charge) {
  std::vector<int> out;
  for (int v : e.valences) {
    if (v == 0) break;
    int adjusted = e.electron_donor_shift ? v + charge : v - std::abs(charge);
    if (e.atomic_number == 1) adjusted = charge == 0 ? 1 : 0;
    if (adjusted >= 0 && std::find(out.begin(), out.end(), adjusted) == out.end())
      out.push_back(adjusted);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int atomic_number(std::string_view symbol) {
  for (const auto &e : kElements)
    if (e.symbol == symbol) return e.atomic_number;
  return 0;
}

std::string_view element_symbol(int z) {
  const ElementData *e = find(z);
  return e == nullptr ? std::string_view("*") : e->symbol;
}

bool is_supported_element(int z) { return find(z) != nullptr; }

bool is_organic_subset(int z) {
  const ElementData *e = find(z);
  return e != nullptr && e->organic;
}

bool can_be_aromatic(int z) {
  const ElementData *e = find(z);
  return e != nullptr && e->aromatic;
}

std::span<const int> neutral_valences(int z) {
  const ElementData *e = find(z);
  if (e == nullptr) return {};
  std::size_t n = 0;
  while (n < e->valences.size() && e->valences[n] != 0) ++n;
  return {e->valences.data(), n};
}

std::optional<int> default_valence(int z, int charge, int used) {
  const ElementData *e = find(z);
  if (e == nullptr) return std::nullopt;
  for (int v : charged_valences(*e, charge))
    if (v >= used) return v;
  return std::nullopt;
}

bool is_allowed_valence(int z, int charge, int used) {
  const ElementData *e = find(z);
  if (e == nullptr) return false;
  auto vals = charged_valences(*e, charge);
  return std::find(vals.begin(), vals.end(), used) != vals.end();
}

}  // namespace brs
