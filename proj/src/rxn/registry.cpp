//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/rxn/registry.h"

#include <array>
#include <fstream>
#include <stdexcept>

namespace brs {
namespace {

constexpr std::array<std::string_view, kNumBrsTemplates> kBrsTemplates = {
    "[#6,#7,#8;h:1].[O,N,F,C:2]>>[#6,#7,#8:1][O,N,F,C:2]",
    "[O,N,C;h:1][O,N,C;h:2]>>[O,N,C:1]=[O,N,C:2]",
    "[N,C;h2:1][N,C;h2:2]>>[N,C:1]#[N,C:2]",
    "[C;h:1]=[N,C;h:2]>>[C:1]#[N,C:2]",
    "[#6,#7,#8;h:1]~[*:2]~[#6,#7,#8;h:3]>>[#6,#7,#8:1]1[*:2]~[#6,#7,#8:3]1",
    "[#6,#7,#8;h:1]~[*:2]~[*:4]~[#6,#7,#8;h:3]>>[#6,#7,#8:1]1[*:2]~[*:4]~[#6,#7,#8:3]1",
    "[#6,#7,#8;h:1]~[*:2]~[*:4]~[*:5]~[#6,#7,#8;h:3]>>[O,N,C:1]1[*:2]~[*:4]~[*:5]~[#6,#7,#8:3]1",
    "[#6,#7,#8;h:1]~[*:2]~[*:4]~[*:5]~[*:6]~[#6,#7,#8;h:3]>>"
    "[O,N,C:1]1[*:2]~[*:4]~[*:5]~[*:6]~[#6,#7,#8:3]1",
    "[#6,#7,#8;h:1]~[*:2]~[*:4]~[*:5]~[*:6]~[*:7]~[#6,#7,#8;h:3]>>"
    "[O,N,C:1]1[*:2]~[*:4]~[*:5]~[*:6]~[*:7]~[#6,#7,#8:3]1",
    "[#6,#7,#8;h:1]~[*:2]~[*:4]~[*:5]~[*:6]~[*:7]~[*:8]~[#6,#7,#8;h:3]>>"
    "[O,N,C:1]1[*:2]~[*:4]~[*:5]~[*:6]~[*:7]~[*:8]~[#6,#7,#8:3]1",
    "[#6,#7,#8:1][O,N,F,C:2]>>[#6,#7,#8;h:1]",
    "[O,N,C:1]=[O,N,C:2]>>[O,N,C;h:1][O,N,C;h:2]",
    "[N,C:1]#[N,C:2]>>[N,C;h2:1][N,C;h2:2]",
    "[C:1]#[N,C:2]>>[C;h:1]=[N,C;h:2]",
    "[#6,#7,#8:1]1[*:2]~[#6,#7,#8:3]1>>[#6,#7,#8;h:1]~[*:2]~[#6,#7,#8;h:3]",
    "[#6,#7,#8:1]1[*:2]~[*:4]~[#6,#7,#8:3]1>>[#6,#7,#8;h:1]~[*:2]~[*:4]~[#6,#7,#8;h:3]",
    "[O,N,C:1]1[*:2]~[*:4]~[*:5]~[#6,#7,#8:3]1>>[#6,#7,#8;h:1]~[*:2]~[*:4]~[*:5]~[#6,#7,#8;h:3]",
    "[O,N,C:1]1[*:2]~[*:4]~[*:5]~[*:6]~[#6,#7,#8:3]1>>"
    "[#6,#7,#8;h:1]~[*:2]~[*:4]~[*:5]~[*:6]~[#6,#7,#8;h:3]",
    "[O,N,C:1]1[*:2]~[*:4]~[*:5]~[*:6]~[*:7]~[#6,#7,#8:3]1>>"
    "[#6,#7,#8;h:1]~[*:2]~[*:4]~[*:5]~[*:6]~[*:7]~[#6,#7,#8;h:3]",
    "[O,N,C:1]1[*:2]~[*:4]~[*:5]~[*:6]~[*:7]~[*:8]~[#6,#7,#8:3]1>>"
    "[#6,#7,#8;h:1]~[*:2]~[*:4]~[*:5]~[*:6]~[*:7]~[*:8]~[#6,#7,#8;h:3]",
};

void check_id(int id) {
  if (id < 1 || id > kNumBrsTemplates)
    throw std::out_of_range("template id " + std::to_string(id) + " outside 1.." +
                            std::to_string(kNumBrsTemplates));
}

}  // namespace

std::span<const std::string_view> brs_template_strings() { return kBrsTemplates; }

int inverse_of(int id) {
  check_id(id);
  return id <= 10 ? id + 10 : id - 10;
}

Direction direction_of(int id) {
  check_id(id);
  return id <= 10 ? Direction::kConstructive : Direction::kDestructive;
}

Registry Registry::builtin() {
  std::vector<std::string> lines(kBrsTemplates.begin(), kBrsTemplates.end());
  return from_strings(lines);
}

Registry Registry::from_strings(std::span<const std::string> lines) {
  Registry r;
  for (const std::string &line : lines) {
    r.reactions_.push_back(parse_reaction(line));
    r.texts_.push_back(strip_whitespace(line));
  }
  return r;
}

Registry Registry::load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open registry file " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (strip_whitespace(line).empty()) {
      // Trailing blank lines are tolerated; interior ones would shift ids.
      lines.push_back("");
      continue;
    }
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (lines[i].empty())
      throw std::runtime_error(path + ":" + std::to_string(i + 1) + ": blank registry line");
  return from_strings(lines);
}

const SmartsReaction &Registry::at(int id) const {
  if (id < 1 || id > size()) throw std::out_of_range("template id " + std::to_string(id) + " not in registry");
  return reactions_[id - 1];
}

const std::string &Registry::text(int id) const {
  at(id);
  return texts_[id - 1];
}

}  // namespace brs
