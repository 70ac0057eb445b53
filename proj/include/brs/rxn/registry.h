//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_RXN_REGISTRY_H_
#define BRS_RXN_REGISTRY_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brs/rxn/reaction.h"

namespace brs {

inline constexpr int kNumBrsTemplates = 20;

enum class Direction { kConstructive, kDestructive };

// The 20 built-in template strings, id = index + 1.
std::span<const std::string_view> brs_template_strings();

// Paired inverse: k <-> k + 10. Throws std::out_of_range outside 1..20.
int inverse_of(int id);
Direction direction_of(int id);

// Ordered template list; ids are 1-based line numbers.
class Registry {
 public:
  static Registry builtin();
  // One reaction SMARTS per line. Blank lines are rejected so that line
  // number and id always agree.
  static Registry load(const std::string &path);
  static Registry from_strings(std::span<const std::string> lines);

  int size() const { return static_cast<int>(reactions_.size()); }
  // Throws std::out_of_range for ids outside 1..size().
  const SmartsReaction &at(int id) const;
  const std::string &text(int id) const;

 private:
  std::vector<SmartsReaction> reactions_;
  std::vector<std::string> texts_;
};

}  // namespace brs

#endif  // BRS_RXN_REGISTRY_H_
