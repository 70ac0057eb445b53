//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_ENCODE_VOCAB_H_
#define BRS_ENCODE_VOCAB_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brs/dataset/record.h"

namespace brs {

inline constexpr int kPadId = 0;
inline constexpr int kBosId = 1;
inline constexpr int kEosId = 2;
inline constexpr int kSepId = 3;
inline constexpr int kUnkId = 4;
inline constexpr int kNumSpecials = 5;
inline constexpr std::array<std::string_view, kNumSpecials> kSpecialTokens = {"<pad>", "<bos>", "<eos>", "<sep>",
                                                                             "<unk>"};

// Specials at ids 0-4, then single characters (bytes) in ascending order.
class Vocab {
 public:
  Vocab();  // specials only
  // Throws DataError when the specials are missing or misplaced, a token
  // repeats, or a non-special token is not a single character.
  static Vocab from_tokens(const std::vector<std::string> &tokens);
  static Vocab from_characters(std::string_view chars);
  static Vocab load(const std::string &path);

  void save(const std::string &path) const;

  int size() const { return static_cast<int>(tokens_.size()); }
  const std::string &token(int id) const;  // throws std::out_of_range
  // kUnkId when absent.
  int id_of(char c) const { return char_ids_[static_cast<unsigned char>(c)]; }
  bool contains(char c) const { return id_of(c) != kUnkId; }

  bool operator==(const Vocab &o) const { return tokens_ == o.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::array<int, 256> char_ids_;
};

// Every character of every reactant, template and product string.
Vocab build_vocab(const std::vector<DatasetRecord> &records);

}  // namespace brs

#endif  // BRS_ENCODE_VOCAB_H_
