//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_DATASET_CORPUS_H_
#define BRS_DATASET_CORPUS_H_

#include <cstdint>
#include <vector>

#include "brs/dataset/record.h"
#include "brs/rxn/registry.h"
#include "brs/smarts/match.h"

namespace brs {

struct AugmentCorpusOptions {
  std::uint64_t seed = 0;
  int variants_per_record = 12;  // candidates tried per record
  MatchMode mode = MatchMode::kIntra;
};

struct AugmentCorpusStats {
  std::size_t input = 0;
  std::size_t augmented = 0;
  std::size_t duplicated = 0;  // no variant fitted the record
};

// Every input record followed by one augmented copy: same reactants and
// template id, a variant template, and the record's products that the
// variant reproduces. Permutation and generalization variants must
// reproduce all of them; variants that involve specialization or
// combination must keep at least one. When no variant fits, the original
// is repeated.
std::vector<DatasetRecord> augment_corpus(const std::vector<DatasetRecord> &train, const Registry &registry,
                                          const AugmentCorpusOptions &options, AugmentCorpusStats *stats = nullptr);

// factor copies per record: the first keeps the canonical reactants, the
// others use randomized SMILES.
std::vector<DatasetRecord> augment_inputs(const std::vector<DatasetRecord> &records, int factor, std::uint64_t seed);

}  // namespace brs

#endif  // BRS_DATASET_CORPUS_H_
