//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_ENCODE_BINARY_H_
#define BRS_ENCODE_BINARY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "brs/dataset/record.h"
#include "brs/encode/encode.h"

namespace brs {

// A sequence stream on disk:
//   <stem>.ids    int32 little-endian token ids, all sequences back to back
//   <stem>.types  int32 little-endian type ids, same layout
//   <stem>.idx    uint64 little-endian offsets (in tokens), N + 1 entries
void write_stream(const std::string &stem, const std::vector<TokenSequence> &seqs);
// Throws DataError on missing files or inconsistent sizes.
std::vector<TokenSequence> read_stream(const std::string &stem);

struct EncodedSet {
  std::vector<TokenSequence> src;
  std::vector<TokenSequence> tgt;
  std::vector<std::uint32_t> record;  // source record index per pair
};

struct EncodeStats {
  std::size_t records = 0;
  std::size_t pairs = 0;
  std::size_t unknown = 0;  // characters mapped to UNK
};

// One (input, target) pair per record product.
EncodedSet encode_records(const std::vector<DatasetRecord> &records, const Vocab &v, InputMode mode,
                          EncodeStats *stats = nullptr);

// <prefix>.src.{ids,types,idx}, <prefix>.tgt.{ids,types,idx} and
// <prefix>.rec (uint32 little-endian record index per pair).
void write_encoded(const std::string &prefix, const EncodedSet &e);
EncodedSet read_encoded(const std::string &prefix);

}  // namespace brs

#endif  // BRS_ENCODE_BINARY_H_
