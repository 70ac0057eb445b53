//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_RXN_REACTION_H_
#define BRS_RXN_REACTION_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brs/smarts/pattern.h"

namespace brs {

class ReactionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SmartsReaction {
  PatternGraph lhs;
  PatternGraph rhs;
  // (lhs atom, rhs atom) for every map number present on both sides.
  std::vector<std::pair<int, int>> map_table;
  std::string raw_text;
};

// Parses "LHS>>RHS". ASCII whitespace is ignored. Throws SmartsParseError
// for syntax errors and ReactionError for structural problems (separator
// count, unmapped or unmatched RHS atoms, duplicate maps).
SmartsReaction parse_reaction(std::string_view text);

// Recomputes map_table and checks the structural rules.
void validate_reaction(SmartsReaction &r);

// LHS and RHS serializations joined by ">>".
std::string to_string(const SmartsReaction &r);

// Copy of text without ASCII whitespace.
std::string strip_whitespace(std::string_view text);

}  // namespace brs

#endif  // BRS_RXN_REACTION_H_
