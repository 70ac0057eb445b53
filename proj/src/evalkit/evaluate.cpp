//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/evalkit/evaluate.h"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "brs/dataset/source.h"
#include "brs/molgraph/canonical.h"
#include "brs/molgraph/smiles.h"

namespace brs {
namespace {

std::string canonical_reference(const std::string &s) {
  try {
    if (s.empty()) throw ChemError("empty SMILES");
    return canonical_smiles(s);
  } catch (const ChemError &e) {
    throw DataError("unparseable reference '" + s + "': " + e.what());
  }
}

bool prediction_in(std::string_view prediction, const std::vector<std::string> &canonical_refs) {
  if (prediction.empty()) return false;
  std::string c;
  try {
    c = canonical_smiles(prediction);
  } catch (const ChemError &) {
    return false;
  }
  return std::find(canonical_refs.begin(), canonical_refs.end(), c) != canonical_refs.end();
}

nlohmann::ordered_json score_json(const Score &s) {
  return {{"total", s.total}, {"correct", s.correct}, {"accuracy", s.accuracy()}};
}

}  // namespace

bool exact_match(std::string_view prediction, const std::vector<std::string> &references) {
  if (references.empty()) throw std::invalid_argument("no references");
  std::vector<std::string> refs;
  for (const std::string &r : references) refs.push_back(canonical_reference(r));
  return prediction_in(prediction, refs);
}

EvalReport evaluate(const std::vector<std::string> &predictions, const std::vector<DatasetRecord> &refs) {
  if (predictions.empty() || refs.empty()) throw DataError("empty prediction or reference input");
  if (predictions.size() != refs.size())
    throw DataError("line count mismatch: " + std::to_string(predictions.size()) + " predictions, " +
                    std::to_string(refs.size()) + " references");
  EvalReport report;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    if (refs[i].products.empty()) throw DataError("reference " + std::to_string(i + 1) + " has no products");
    std::vector<std::string> canon;
    for (const std::string &p : refs[i].products) canon.push_back(canonical_reference(p));
    const bool hit = prediction_in(predictions[i], canon);
    Score &t = report.per_template[refs[i].template_id];
    ++report.overall.total;
    ++t.total;
    if (hit) {
      ++report.overall.correct;
      ++t.correct;
    }
  }
  return report;
}

std::string EvalReport::to_json() const {
  nlohmann::ordered_json j = score_json(overall);
  nlohmann::ordered_json per = nlohmann::ordered_json::object();
  for (const auto &[id, s] : per_template) per[std::to_string(id)] = score_json(s);
  j["per_template"] = per;
  return j.dump();
}

std::vector<std::string> read_predictions(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read predictions " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(first == std::string::npos ? std::string() : line.substr(first, last - first + 1));
  }
  return out;
}

EvalReport evaluate_files(const std::string &pred_path, const std::string &ref_path) {
  return evaluate(read_predictions(pred_path), read_records(ref_path));
}

}  // namespace brs
