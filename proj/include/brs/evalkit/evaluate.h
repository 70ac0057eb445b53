//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_EVALKIT_EVALUATE_H_
#define BRS_EVALKIT_EVALUATE_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "brs/dataset/record.h"

namespace brs {

struct Score {
  std::size_t total = 0;
  std::size_t correct = 0;
  double accuracy() const { return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total); }
};

struct EvalReport {
  Score overall;
  std::map<int, Score> per_template;

  std::string to_json() const;
};

// True when the prediction canonicalizes to one of the references. An
// unparseable prediction is a miss; an unparseable reference throws
// DataError, an empty reference list std::invalid_argument.
bool exact_match(std::string_view prediction, const std::vector<std::string> &references);

// predictions[i] is scored against refs[i].products. Throws DataError for
// empty input or a count mismatch.
EvalReport evaluate(const std::vector<std::string> &predictions, const std::vector<DatasetRecord> &refs);

// One SMILES per line against a record file.
std::vector<std::string> read_predictions(const std::string &path);
EvalReport evaluate_files(const std::string &pred_path, const std::string &ref_path);

}  // namespace brs

#endif  // BRS_EVALKIT_EVALUATE_H_
