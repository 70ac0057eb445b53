//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/dataset/filter.h"

#include <fstream>

#include "brs/dataset/source.h"
#include "brs/rxn/reaction.h"
#include "brs/smarts/match.h"

namespace brs {

std::vector<std::string> default_forbidden_smarts() {
  return {"[#8]~[#8]", "[#6]=[#6]=[#6]", "[#8]-[#9]", "[#7]-[#9]"};
}

std::vector<PatternGraph> parse_forbidden(const std::vector<std::string> &smarts) {
  std::vector<PatternGraph> out;
  for (const std::string &s : smarts) {
    try {
      out.push_back(parse_smarts(strip_whitespace(s)));
    } catch (const SmartsParseError &e) {
      throw DataError("forbidden pattern '" + s + "': " + e.what());
    }
  }
  return out;
}

std::vector<std::string> load_forbidden_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read forbidden-pattern file " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    line = strip_whitespace(line);
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

FilterVerdict check_product(const Molecule &p, const std::vector<PatternGraph> &forbidden,
                            const ScaffoldSet *allowlist) {
  const std::span<const Molecule> mols(&p, 1);
  for (const PatternGraph &f : forbidden)
    if (!match(f, mols).empty()) return FilterVerdict::kForbidden;
  if (allowlist != nullptr)
    for (const std::string &sig : scaffold_signatures(p))
      if (!allowlist->count(sig)) return FilterVerdict::kScaffold;
  return FilterVerdict::kPass;
}

}  // namespace brs
