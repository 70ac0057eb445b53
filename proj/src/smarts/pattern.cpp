//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/smarts/pattern.h"

#include "brs/molgraph/element.h"

namespace brs {

int PatternGraph::find_bond(int a, int b) const {
  for (int i = 0; i < static_cast<int>(bonds.size()); ++i) {
    const PatternBond &bd = bonds[i];
    if ((bd.begin == a && bd.end == b) || (bd.begin == b && bd.end == a)) return i;
  }
  return -1;
}

int PatternGraph::find_map(int map) const {
  if (map == 0) return -1;
  for (int i = 0; i < num_atoms(); ++i)
    if (atoms[i].map == map) return i;
  return -1;
}

std::string to_string(const Primitive &p) {
  switch (p.kind) {
  case PrimitiveKind::kAtomicNumber:
    return "#" + std::to_string(p.value);
  case PrimitiveKind::kAliphatic:
    return std::string(element_symbol(p.value));
  case PrimitiveKind::kAromatic: {
    std::string s(element_symbol(p.value));
    s[0] = static_cast<char>(s[0] - 'A' + 'a');
    return s;
  }
  case PrimitiveKind::kWildcard:
    return "*";
  case PrimitiveKind::kHydrogen:
    return p.value < 0 ? "h" : "h" + std::to_string(p.value);
  }
  return "";
}

std::string to_string(const AtomExpr &e) {
  std::string body;
  for (std::size_t i = 0; i < e.or_terms.size(); ++i) {
    if (i > 0) body += ',';
    body += to_string(e.or_terms[i]);
  }
  for (const Primitive &p : e.and_terms) body += ";" + to_string(p);
  if (!e.bracketed && e.map == 0) return body;
  if (e.map != 0) body += ":" + std::to_string(e.map);
  return "[" + body + "]";
}

std::string to_string(BondExpr b) {
  switch (b) {
  case BondExpr::kSingle:
    return "-";
  case BondExpr::kDouble:
    return "=";
  case BondExpr::kTriple:
    return "#";
  case BondExpr::kAny:
    return "~";
  case BondExpr::kUnspecified:
    break;
  }
  return "";
}

std::string to_string(const PatternGraph &p) {
  std::string out;
  for (std::size_t c = 0; c < p.components.size(); ++c) {
    if (c > 0) out += '.';
    for (const LayoutToken &t : p.components[c].layout) {
      switch (t.kind) {
      case LayoutToken::kAtom:
        out += to_string(p.atoms[t.index]);
        break;
      case LayoutToken::kBond:
        out += to_string(p.bonds[t.index].kind);
        break;
      case LayoutToken::kRing:
        if (t.write_bond) out += to_string(p.bonds[t.index].kind);
        out += t.digit < 10 ? std::to_string(t.digit) : "%" + std::to_string(t.digit);
        break;
      case LayoutToken::kOpen:
        out += '(';
        break;
      case LayoutToken::kClose:
        out += ')';
        break;
      }
    }
  }
  return out;
}

}  // namespace brs
