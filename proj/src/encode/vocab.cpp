//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/encode/vocab.h"

#include <fstream>
#include <set>
#include <stdexcept>

#include "brs/dataset/source.h"

namespace brs {

Vocab::Vocab() {
  for (std::string_view s : kSpecialTokens) tokens_.emplace_back(s);
  char_ids_.fill(kUnkId);
}

Vocab Vocab::from_tokens(const std::vector<std::string> &tokens) {
  if (tokens.size() < kNumSpecials) throw DataError("vocab lacks the special tokens");
  for (int i = 0; i < kNumSpecials; ++i)
    if (tokens[i] != kSpecialTokens[i]) throw DataError("vocab line " + std::to_string(i + 1) + " must be " +
                                                        std::string(kSpecialTokens[i]));
  Vocab v;
  for (std::size_t i = kNumSpecials; i < tokens.size(); ++i) {
    const std::string &t = tokens[i];
    if (t.size() != 1) throw DataError("vocab token '" + t + "' is not a single character");
    if (v.contains(t[0])) throw DataError("vocab token '" + t + "' repeats");
    v.char_ids_[static_cast<unsigned char>(t[0])] = v.size();
    v.tokens_.push_back(t);
  }
  return v;
}

Vocab Vocab::from_characters(std::string_view chars) {
  std::set<unsigned char> unique(chars.begin(), chars.end());
  std::vector<std::string> tokens(kSpecialTokens.begin(), kSpecialTokens.end());
  for (unsigned char c : unique) tokens.emplace_back(1, static_cast<char>(c));
  return from_tokens(tokens);
}

Vocab Vocab::load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read vocab " + path);
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) tokens.push_back(line);
  return from_tokens(tokens);
}

void Vocab::save(const std::string &path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write vocab " + path);
  for (const std::string &t : tokens_) out << t << '\n';
}

const std::string &Vocab::token(int id) const {
  if (id < 0 || id >= size()) throw std::out_of_range("token id " + std::to_string(id) + " outside vocab");
  return tokens_[id];
}

Vocab build_vocab(const std::vector<DatasetRecord> &records) {
  std::string chars;
  for (const DatasetRecord &r : records) {
    for (const std::string &s : r.reactants) chars += s;
    chars += r.template_smarts;
    for (const std::string &s : r.products) chars += s;
  }
  for (char c : chars)
    if (c == '\n' || c == '\r') throw DataError("line break inside a record string");
  return Vocab::from_characters(chars);
}

}  // namespace brs
