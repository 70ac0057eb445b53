//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/dataset/record.h"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "brs/dataset/source.h"

namespace brs {

std::string to_json_line(const DatasetRecord &r) {
  nlohmann::ordered_json j;
  j["reactants"] = r.reactants;
  j["template_id"] = r.template_id;
  j["template"] = r.template_smarts;
  j["products"] = r.products;
  j["split"] = r.split;
  return j.dump();
}

DatasetRecord parse_record(std::string_view line) {
  DatasetRecord r;
  try {
    const nlohmann::json j = nlohmann::json::parse(line);
    r.reactants = j.at("reactants").get<std::vector<std::string>>();
    r.template_id = j.at("template_id").get<int>();
    r.template_smarts = j.value("template", std::string());
    r.products = j.at("products").get<std::vector<std::string>>();
    r.split = j.value("split", std::string());
  } catch (const nlohmann::json::exception &e) {
    throw DataError(std::string("malformed record: ") + e.what());
  }
  if (r.reactants.empty()) throw DataError("record without reactants");
  return r;
}

std::vector<DatasetRecord> read_records(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read record file " + path);
  std::vector<DatasetRecord> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_record(line));
    } catch (const DataError &e) {
      throw DataError(path + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

void write_records(const std::string &path, const std::vector<DatasetRecord> &records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write record file " + path);
  for (const DatasetRecord &r : records) out << to_json_line(r) << '\n';
}

std::string group_key(std::vector<std::string> reactants, int template_id) {
  std::sort(reactants.begin(), reactants.end());
  std::string key;
  for (const std::string &s : reactants) key += s + ' ';
  return key + '#' + std::to_string(template_id);
}

std::string group_key(const DatasetRecord &r) { return group_key(r.reactants, r.template_id); }

}  // namespace brs
