//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/dataset/corpus.h"

#include <algorithm>
#include <map>

#include "brs/augment/augment.h"
#include "brs/molgraph/canonical.h"
#include "brs/molgraph/smiles.h"
#include "brs/rxn/apply.h"
#include "brs/util/random.h"

namespace brs {
namespace {

constexpr int kVariantPool = 64;

bool narrows(const AugmentedTemplate &v) {
  return std::any_of(v.ops.begin(), v.ops.end(), [](const AugmentationOp &op) {
    return op.kind == OpKind::kSpecialize || op.kind == OpKind::kCombine;
  });
}

// Products of `record` that the variant keeps, or empty when it does not fit.
std::vector<std::string> fitted_products(const AugmentedTemplate &v, const std::vector<Molecule> &reactants,
                                         const DatasetRecord &record, MatchMode mode) {
  std::vector<std::string> got;
  try {
    got = apply(v.result, reactants, mode);
  } catch (const std::exception &) {
    return {};
  }
  std::vector<std::string> common;
  std::set_intersection(record.products.begin(), record.products.end(), got.begin(), got.end(),
                        std::back_inserter(common));
  if (!narrows(v) && common.size() != record.products.size()) return {};
  return common;
}

}  // namespace

std::vector<DatasetRecord> augment_corpus(const std::vector<DatasetRecord> &train, const Registry &registry,
                                          const AugmentCorpusOptions &options, AugmentCorpusStats *stats) {
  AugmentCorpusStats local;
  local.input = train.size();
  std::map<int, std::vector<AugmentedTemplate>> pools;
  auto pool_for = [&](int id) -> const std::vector<AugmentedTemplate> & {
    auto it = pools.find(id);
    if (it != pools.end()) return it->second;
    EnumerateOptions eo;
    eo.max_count = kVariantPool;
    eo.seed = derive_seed(options.seed, {static_cast<std::uint64_t>(id)});
    eo.base_id = id;
    return pools.emplace(id, enumerate_variants(registry.at(id), eo)).first->second;
  };

  std::vector<DatasetRecord> out;
  out.reserve(2 * train.size());
  for (std::size_t i = 0; i < train.size(); ++i) {
    const DatasetRecord &rec = train[i];
    out.push_back(rec);
    DatasetRecord products_sorted = rec;
    std::sort(products_sorted.products.begin(), products_sorted.products.end());

    std::vector<Molecule> reactants;
    for (const std::string &s : rec.reactants) reactants.push_back(parse_smiles(s));
    std::vector<const AugmentedTemplate *> order;
    for (const AugmentedTemplate &v : pool_for(rec.template_id)) order.push_back(&v);
    Rng rng(derive_seed(options.seed, {0x7265636fULL, i}));
    seeded_shuffle(order, rng);
    if (static_cast<int>(order.size()) > options.variants_per_record) order.resize(options.variants_per_record);

    bool done = false;
    for (const AugmentedTemplate *v : order) {
      std::vector<std::string> kept = fitted_products(*v, reactants, products_sorted, options.mode);
      if (kept.empty()) continue;
      DatasetRecord aug = rec;
      aug.template_smarts = v->text;
      aug.products = std::move(kept);
      out.push_back(std::move(aug));
      ++local.augmented;
      done = true;
      break;
    }
    if (!done) {
      out.push_back(rec);
      ++local.duplicated;
    }
  }
  if (stats != nullptr) *stats = local;
  return out;
}

std::vector<DatasetRecord> augment_inputs(const std::vector<DatasetRecord> &records, int factor, std::uint64_t seed) {
  std::vector<DatasetRecord> out;
  if (factor < 1) return out;
  out.reserve(records.size() * factor);
  for (std::size_t i = 0; i < records.size(); ++i) {
    out.push_back(records[i]);
    if (factor == 1) continue;
    std::vector<Molecule> mols;
    for (const std::string &s : records[i].reactants) mols.push_back(parse_smiles(s));
    for (int j = 1; j < factor; ++j) {
      DatasetRecord copy = records[i];
      for (std::size_t r = 0; r < mols.size(); ++r)
        copy.reactants[r] = randomized_smiles(mols[r], derive_seed(seed, {i, static_cast<std::uint64_t>(j), r}));
      out.push_back(std::move(copy));
    }
  }
  return out;
}

}  // namespace brs
