//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_SMARTS_PATTERN_H_
#define BRS_SMARTS_PATTERN_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "brs/molgraph/molecule.h"

namespace brs {

class SmartsParseError : public std::runtime_error {
 public:
  SmartsParseError(const std::string &what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) { }

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

enum class PrimitiveKind {
  kAtomicNumber,  // #n
  kAliphatic,     // C, N, ...
  kAromatic,      // c, n, ...
  kWildcard,      // *
  kHydrogen,      // h (value -1) or hN
};

struct Primitive {
  PrimitiveKind kind = PrimitiveKind::kWildcard;
  int value = 0;  // atomic number, or hydrogen count (-1 for bare h)

  bool operator==(const Primitive &) const = default;
};

// (or_terms[0] , or_terms[1] , ...) ; and_terms[0] ; and_terms[1] ...
struct AtomExpr {
  std::vector<Primitive> or_terms;
  std::vector<Primitive> and_terms;
  int map = 0;  // 0 when unmapped
  bool bracketed = true;

  bool operator==(const AtomExpr &) const = default;
};

enum class BondExpr {
  kUnspecified,  // single or aromatic
  kSingle,
  kDouble,
  kTriple,
  kAny,
};

struct PatternBond {
  int begin = 0;
  int end = 0;
  BondExpr kind = BondExpr::kUnspecified;
};

// Written form of a component, kept so that serialization reproduces the
// input text (up to whitespace) after edits to atom expressions.
struct LayoutToken {
  enum Kind { kAtom, kBond, kRing, kOpen, kClose } kind;
  int index = 0;  // atom, or bond (kBond, kRing)
  int digit = 0;  // kRing
  bool write_bond = false;  // kRing: bond symbol is written at this end
};

struct PatternComponent {
  std::vector<int> atoms;  // global atom indices
  std::vector<LayoutToken> layout;
};

struct PatternGraph {
  std::vector<AtomExpr> atoms;
  std::vector<PatternBond> bonds;
  std::vector<int> component_of;  // per atom
  std::vector<PatternComponent> components;

  int num_atoms() const { return static_cast<int>(atoms.size()); }
  int num_components() const { return static_cast<int>(components.size()); }
  // Index of the bond joining a and b, or -1.
  int find_bond(int a, int b) const;
  // Atom index carrying a map number, or -1.
  int find_map(int map) const;
};

// Parses a SMARTS subset: bracket atoms built from #n, element symbols,
// aromatic symbols, *, h and hN joined by ',' and ';' with an optional
// ':map'; bonds -, =, #, ~; ring closures; branches; '.' components.
// Bare organic atoms are accepted unless require_brackets is set.
PatternGraph parse_smarts(std::string_view text, bool require_brackets = false);

std::string to_string(const Primitive &p);
std::string to_string(const AtomExpr &e);
std::string to_string(BondExpr b);
std::string to_string(const PatternGraph &p);

}  // namespace brs

#endif  // BRS_SMARTS_PATTERN_H_
