//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/encode/binary.h"

#include <fstream>
#include <iterator>
#include <type_traits>

#include "brs/dataset/source.h"

namespace brs {
namespace {

template <class T>
void put_le(std::ofstream &out, T value) {
  unsigned char bytes[sizeof(T)];
  auto u = static_cast<std::make_unsigned_t<T>>(value);
  for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<unsigned char>(u >> (8 * i));
  out.write(reinterpret_cast<const char *>(bytes), sizeof(T));
}

template <class T>
std::vector<T> read_le(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::vector<unsigned char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (raw.size() % sizeof(T) != 0) throw DataError(path + ": size is not a multiple of " + std::to_string(sizeof(T)));
  std::vector<T> out(raw.size() / sizeof(T));
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::make_unsigned_t<T> u = 0;
    for (std::size_t b = 0; b < sizeof(T); ++b) u |= static_cast<std::make_unsigned_t<T>>(raw[i * sizeof(T) + b]) << (8 * b);
    out[i] = static_cast<T>(u);
  }
  return out;
}

std::ofstream open_out(const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  return out;
}

}  // namespace

void write_stream(const std::string &stem, const std::vector<TokenSequence> &seqs) {
  std::ofstream ids = open_out(stem + ".ids");
  std::ofstream types = open_out(stem + ".types");
  std::ofstream idx = open_out(stem + ".idx");
  std::uint64_t offset = 0;
  put_le<std::uint64_t>(idx, offset);
  for (const TokenSequence &t : seqs) {
    if (t.ids.size() != t.type_ids.size()) throw DataError("ids and type ids differ in length");
    for (std::int32_t id : t.ids) put_le<std::int32_t>(ids, id);
    for (std::int32_t ty : t.type_ids) put_le<std::int32_t>(types, ty);
    offset += t.ids.size();
    put_le<std::uint64_t>(idx, offset);
  }
}

std::vector<TokenSequence> read_stream(const std::string &stem) {
  const std::vector<std::int32_t> ids = read_le<std::int32_t>(stem + ".ids");
  const std::vector<std::int32_t> types = read_le<std::int32_t>(stem + ".types");
  const std::vector<std::uint64_t> idx = read_le<std::uint64_t>(stem + ".idx");
  if (ids.size() != types.size()) throw DataError(stem + ": ids and types differ in length");
  if (idx.empty() || idx.front() != 0 || idx.back() != ids.size()) throw DataError(stem + ": bad offset index");
  std::vector<TokenSequence> out;
  for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
    if (idx[i + 1] < idx[i]) throw DataError(stem + ": offsets decrease");
    TokenSequence t;
    t.ids.assign(ids.begin() + idx[i], ids.begin() + idx[i + 1]);
    t.type_ids.assign(types.begin() + idx[i], types.begin() + idx[i + 1]);
    out.push_back(std::move(t));
  }
  return out;
}

EncodedSet encode_records(const std::vector<DatasetRecord> &records, const Vocab &v, InputMode mode,
                          EncodeStats *stats) {
  EncodedSet e;
  EncodeStats local;
  local.records = records.size();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const DatasetRecord &r = records[i];
    const std::optional<std::string> tmpl =
        mode == InputMode::kTemplateBased ? std::optional<std::string>(r.template_smarts) : std::nullopt;
    const TokenSequence src = encode_input(r.reactants, tmpl, v, mode, &local.unknown);
    for (const std::string &p : r.products) {
      e.src.push_back(src);
      e.tgt.push_back(encode_target(p, v, &local.unknown));
      e.record.push_back(static_cast<std::uint32_t>(i));
    }
  }
  local.pairs = e.src.size();
  if (stats != nullptr) *stats = local;
  return e;
}

void write_encoded(const std::string &prefix, const EncodedSet &e) {
  write_stream(prefix + ".src", e.src);
  write_stream(prefix + ".tgt", e.tgt);
  std::ofstream rec = open_out(prefix + ".rec");
  for (std::uint32_t r : e.record) put_le<std::uint32_t>(rec, r);
}

EncodedSet read_encoded(const std::string &prefix) {
  EncodedSet e;
  e.src = read_stream(prefix + ".src");
  e.tgt = read_stream(prefix + ".tgt");
  e.record = read_le<std::uint32_t>(prefix + ".rec");
  if (e.src.size() != e.tgt.size() || e.src.size() != e.record.size())
    throw DataError(prefix + ": src, tgt and rec counts differ");
  return e;
}

}  // namespace brs
