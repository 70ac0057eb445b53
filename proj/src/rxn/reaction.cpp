//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/rxn/reaction.h"

#include <set>

namespace brs {
namespace {

void check_unique_maps(const PatternGraph &g, const char *side) {
  std::set<int> seen;
  for (const AtomExpr &e : g.atoms)
    if (e.map != 0 && !seen.insert(e.map).second)
      throw ReactionError(std::string("duplicate atom map ") + std::to_string(e.map) + " on " + side);
}

}  // namespace

std::string strip_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r' && c != '\v' && c != '\f') out += c;
  return out;
}

SmartsReaction parse_reaction(std::string_view text) {
  const std::string s = strip_whitespace(text);
  const std::size_t sep = s.find(">>");
  if (sep == std::string::npos) throw ReactionError("missing '>>' separator");
  if (s.find(">>", sep + 2) != std::string::npos) throw ReactionError("multiple '>>' separators");
  SmartsReaction r;
  r.raw_text = std::string(text);
  try {
    r.lhs = parse_smarts(std::string_view(s).substr(0, sep), true);
  } catch (const SmartsParseError &e) {
    throw SmartsParseError(std::string("reactant side: ") + e.what(), e.offset());
  }
  try {
    r.rhs = parse_smarts(std::string_view(s).substr(sep + 2), true);
  } catch (const SmartsParseError &e) {
    throw SmartsParseError(std::string("product side: ") + e.what(), e.offset() + sep + 2);
  }
  validate_reaction(r);
  return r;
}

void validate_reaction(SmartsReaction &r) {
  check_unique_maps(r.lhs, "reactant side");
  check_unique_maps(r.rhs, "product side");
  r.map_table.clear();
  for (int i = 0; i < r.rhs.num_atoms(); ++i) {
    const int map = r.rhs.atoms[i].map;
    if (map == 0) throw ReactionError("unmapped product atom " + std::to_string(i));
    const int l = r.lhs.find_map(map);
    if (l < 0) throw ReactionError("product map " + std::to_string(map) + " has no reactant atom");
    r.map_table.push_back({l, i});
  }
}

std::string to_string(const SmartsReaction &r) { return to_string(r.lhs) + ">>" + to_string(r.rhs); }

}  // namespace brs
