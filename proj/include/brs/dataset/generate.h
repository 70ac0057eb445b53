//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_DATASET_GENERATE_H_
#define BRS_DATASET_GENERATE_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brs/dataset/filter.h"
#include "brs/dataset/record.h"
#include "brs/dataset/scaffold.h"
#include "brs/dataset/source.h"
#include "brs/rxn/registry.h"
#include "brs/smarts/match.h"

namespace brs {

inline constexpr std::array<const char *, 3> kSplitNames = {"train", "valid", "test"};

struct GenerateConfig {
  std::vector<MoleculeSource> sources;
  std::string registry_path;  // empty: built-in templates
  std::vector<int> templates;  // empty: every registry id
  std::array<std::size_t, 3> counts = {2000, 200, 200};  // train, valid, test
  std::uint64_t seed = 1;
  std::vector<std::string> forbidden = default_forbidden_smarts();
  std::string allowlist_path;  // empty: no ring-system check
  int product_cap = 8;        // per record; 0 keeps all
  int per_template_cap = 0;   // records per template; 0 for no cap
  MatchMode mode = MatchMode::kIntra;
  int tries_per_item = 4;     // molecules drawn before an item gives up
  std::size_t max_items = 0;  // 0: 200 x target
  int workers = 1;
  std::string out_dir;  // used by the CLI
};

// JSON config. Relative paths are taken relative to the config file.
// Throws DataError.
GenerateConfig load_generate_config(const std::string &path);

struct TemplateStats {
  std::size_t items = 0;
  std::size_t no_match = 0;  // no product survived for any draw
  std::size_t records = 0;
  std::size_t products = 0;
};

struct GenerateStats {
  std::size_t pool_size = 0;
  std::vector<std::pair<std::string, LoadStats>> sources;
  std::size_t items = 0;
  std::size_t duplicate_groups = 0;
  std::size_t capped_template = 0;
  std::size_t rejected_noop = 0;
  std::size_t rejected_forbidden = 0;
  std::size_t rejected_scaffold = 0;
  std::size_t apply_errors = 0;
  std::size_t truncated_products = 0;
  std::map<int, TemplateStats> per_template;
  bool complete = false;
  std::string to_json() const;
};

struct Corpus {
  std::array<std::vector<DatasetRecord>, 3> splits;  // train, valid, test
  GenerateStats stats;
};

// Deterministic for a given config; the worker count does not change the
// output. An exhausted pool yields a partial corpus with complete = false.
Corpus generate(const GenerateConfig &cfg);
Corpus generate(const GenerateConfig &cfg, const Registry &registry, const std::vector<Molecule> &pool);

// Writes train.jsonl, valid.jsonl, test.jsonl and stats.json.
void write_corpus(const Corpus &c, const std::string &dir);

}  // namespace brs

#endif  // BRS_DATASET_GENERATE_H_
