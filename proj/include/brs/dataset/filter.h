//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_DATASET_FILTER_H_
#define BRS_DATASET_FILTER_H_

#include <string>
#include <vector>

#include "brs/dataset/scaffold.h"
#include "brs/molgraph/molecule.h"
#include "brs/smarts/pattern.h"

namespace brs {

// O~O, C=C=C, O-F, N-F.
std::vector<std::string> default_forbidden_smarts();
std::vector<PatternGraph> parse_forbidden(const std::vector<std::string> &smarts);
// SMARTS per line; blank lines and lines starting with '#' are skipped.
std::vector<std::string> load_forbidden_file(const std::string &path);

enum class FilterVerdict { kPass, kForbidden, kScaffold };

// allowlist == nullptr disables the ring-system check.
FilterVerdict check_product(const Molecule &p, const std::vector<PatternGraph> &forbidden,
                            const ScaffoldSet *allowlist);

inline bool filter_product(const Molecule &p, const std::vector<PatternGraph> &forbidden,
                           const ScaffoldSet *allowlist) {
  return check_product(p, forbidden, allowlist) == FilterVerdict::kPass;
}

}  // namespace brs

#endif  // BRS_DATASET_FILTER_H_
