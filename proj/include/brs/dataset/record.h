//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_DATASET_RECORD_H_
#define BRS_DATASET_RECORD_H_

#include <string>
#include <string_view>
#include <vector>

namespace brs {

struct DatasetRecord {
  std::vector<std::string> reactants;  // canonical SMILES
  int template_id = 0;
  std::string template_smarts;
  std::vector<std::string> products;  // canonical, sorted, unique
  std::string split;                  // train, valid or test

  bool operator==(const DatasetRecord &) const = default;
};

// {"reactants":[...],"template_id":N,"template":"...","products":[...],"split":"..."}
std::string to_json_line(const DatasetRecord &r);
// Throws DataError on malformed lines.
DatasetRecord parse_record(std::string_view line);

std::vector<DatasetRecord> read_records(const std::string &path);
void write_records(const std::string &path, const std::vector<DatasetRecord> &records);

// Leakage unit: sorted reactants and template id.
std::string group_key(const DatasetRecord &r);
std::string group_key(std::vector<std::string> reactants, int template_id);

}  // namespace brs

#endif  // BRS_DATASET_RECORD_H_
