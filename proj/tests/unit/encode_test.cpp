//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include "brs/encode/binary.h"
#include "brs/encode/encode.h"
#include "brs/encode/vocab.h"
#include "test_support.h"

namespace brs {
namespace {

std::vector<DatasetRecord> sample_records() {
  return {{{"CCO", "N"}, 2, "[O,N,C;h:1][O,N,C;h:2]>>[O,N,C:1]=[O,N,C:2]", {"C=CO", "CC=O"}, "train"},
          {{"c1ccsc1"}, 11, "[#6,#7,#8:1][O,N,F,C:2]>>[#6,#7,#8;h:1]", {"CC#N"}, "test"}};
}

TEST(Vocab, SpecialsFirstThenSortedCharacters) {
  const Vocab v = Vocab::from_characters("cbaab");
  ASSERT_EQ(v.size(), kNumSpecials + 3);
  EXPECT_EQ(v.token(kPadId), "<pad>");
  EXPECT_EQ(v.token(kUnkId), "<unk>");
  EXPECT_EQ(v.token(5), "a");
  EXPECT_EQ(v.token(7), "c");
  EXPECT_EQ(v.id_of('b'), 6);
  EXPECT_EQ(v.id_of('z'), kUnkId);
  EXPECT_FALSE(v.contains('z'));
  EXPECT_THROW(v.token(99), std::out_of_range);
}

TEST(Vocab, FromTokensValidates) {
  EXPECT_THROW(Vocab::from_tokens({"<pad>", "a"}), std::exception);
  EXPECT_THROW(Vocab::from_tokens({"<pad>", "<bos>", "<eos>", "<sep>", "<unk>", "ab"}), std::exception);
  EXPECT_THROW(Vocab::from_tokens({"<pad>", "<bos>", "<eos>", "<sep>", "<unk>", "a", "a"}), std::exception);
  EXPECT_NO_THROW(Vocab::from_tokens({"<pad>", "<bos>", "<eos>", "<sep>", "<unk>", "a"}));
}

TEST(Vocab, SaveLoad) {
  const Vocab v = build_vocab(sample_records());
  const std::filesystem::path dir = test::temp_dir("vocab");
  v.save((dir / "v.txt").string());
  const std::string text = test::read_file((dir / "v.txt").string());
  EXPECT_EQ(text.rfind("<pad>\n<bos>\n<eos>\n<sep>\n<unk>\n", 0), 0u);
  EXPECT_EQ(Vocab::load((dir / "v.txt").string()), v);
}

TEST(Vocab, CoversRecordText) {
  const Vocab v = build_vocab(sample_records());
  for (const DatasetRecord &r : sample_records()) {
    for (const std::string &s : r.reactants)
      for (char c : s) EXPECT_TRUE(v.contains(c));
    for (char c : r.template_smarts) EXPECT_TRUE(v.contains(c));
  }
  std::vector<DatasetRecord> reversed = sample_records();
  std::reverse(reversed.begin(), reversed.end());
  EXPECT_EQ(build_vocab(reversed), v);
}

TEST(Encode, InputLayout) {
  const Vocab v = Vocab::from_characters("CNO=[]:;,1h#>.");
  const TokenSequence t = encode_input({"CO", "N"}, std::string("C>>C"), v, InputMode::kTemplateBased);
  const std::vector<std::int32_t> types = {kTypeReactant, kTypeReactant, kTypeSpecial, kTypeReactant, kTypeSpecial,
                                           kTypeReaction, kTypeReaction, kTypeReaction, kTypeReaction};
  EXPECT_EQ(t.type_ids, types);
  EXPECT_EQ(t.ids[2], kSepId);
  EXPECT_EQ(t.ids[0], v.id_of('C'));
  EXPECT_THROW(encode_input({"CO"}, std::string("C>>C"), v, InputMode::kTemplateFree), std::exception);
  EXPECT_THROW(encode_input({"CO"}, std::nullopt, v, InputMode::kTemplateBased), std::exception);
  const TokenSequence f = encode_input({"CO", "N"}, std::nullopt, v, InputMode::kTemplateFree);
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(decode(f, v, "."), "CO.N");
}

TEST(Encode, TargetLayout) {
  const Vocab v = Vocab::from_characters("C=O");
  const TokenSequence t = encode_target("C=O", v);
  EXPECT_EQ(t.ids.front(), kBosId);
  EXPECT_EQ(t.ids.back(), kEosId);
  EXPECT_EQ(t.type_ids.front(), kTypeSpecial);
  EXPECT_EQ(t.type_ids[1], kTypeProduct);
  EXPECT_EQ(decode(t, v), "C=O");
}

TEST(Encode, UnknownCharacters) {
  const Vocab v = Vocab::from_characters("C");
  std::size_t unknown = 0;
  const TokenSequence t = encode_target("CNC", v, &unknown);
  EXPECT_EQ(unknown, 1u);
  EXPECT_EQ(t.ids[2], kUnkId);
}

TEST(Encode, Padding) {
  const Vocab v = Vocab::from_characters("C");
  TokenSequence t = encode_target("CC", v);
  pad_to(t, 8);
  EXPECT_EQ(t.size(), 8u);
  EXPECT_EQ(t.ids.back(), kPadId);
  EXPECT_EQ(t.type_ids.back(), kTypePad);
  EXPECT_EQ(decode(t, v), "CC");
}

TEST(EncodeProperty, DecodeInvertsEncode) {
  Rng rng(12);
  const Vocab v = Vocab::from_characters("CNOSFcnos()=#123456789[]+-H@/\\.%:;,>*~h");
  for (int i = 0; i < 300; ++i) {
    std::vector<std::string> reactants;
    const int k = 1 + static_cast<int>(random_index(rng, 3));
    for (int j = 0; j < k; ++j) reactants.push_back(write_canonical(test::random_molecule(rng)));
    std::string joined;
    for (const std::string &s : reactants) joined += (joined.empty() ? "" : "|") + s;
    const TokenSequence tb = encode_input(reactants, std::string("[C:1]>>[C:1]"), v, InputMode::kTemplateBased);
    EXPECT_EQ(decode(tb, v, "|"), joined + "|[C:1]>>[C:1]");
    EXPECT_EQ(tb.ids.size(), tb.type_ids.size());
    const TokenSequence tgt = encode_target(reactants[0], v);
    EXPECT_EQ(decode(tgt, v), reactants[0]);
  }
}

TEST(Binary, StreamLayout) {
  std::vector<TokenSequence> seqs = {{{1, 7, 2}, {4, 3, 4}}, {{}, {}}, {{300000}, {1}}};
  const std::filesystem::path dir = test::temp_dir("binary");
  const std::string stem = (dir / "s").string();
  write_stream(stem, seqs);
  const std::string idx = test::read_file(stem + ".idx");
  ASSERT_EQ(idx.size(), 4 * 8u);
  EXPECT_EQ(static_cast<unsigned char>(idx[8]), 3u);
  EXPECT_EQ(static_cast<unsigned char>(idx[24]), 4u);
  const std::string ids = test::read_file(stem + ".ids");
  ASSERT_EQ(ids.size(), 4 * 4u);
  // 300000 = 0x000493e0, little-endian
  EXPECT_EQ(static_cast<unsigned char>(ids[12]), 0xe0u);
  EXPECT_EQ(static_cast<unsigned char>(ids[13]), 0x93u);
  EXPECT_EQ(static_cast<unsigned char>(ids[14]), 0x04u);
  EXPECT_EQ(read_stream(stem), seqs);
}

TEST(Binary, EncodedSetRoundTrip) {
  const Vocab v = build_vocab(sample_records());
  EncodeStats st;
  const EncodedSet e = encode_records(sample_records(), v, InputMode::kTemplateBased, &st);
  EXPECT_EQ(st.records, 2u);
  EXPECT_EQ(st.pairs, 3u);
  EXPECT_EQ(e.record, (std::vector<std::uint32_t>{0, 0, 1}));
  EXPECT_EQ(e.src[0], e.src[1]);
  const std::filesystem::path dir = test::temp_dir("encoded");
  write_encoded((dir / "p").string(), e);
  EXPECT_TRUE(std::filesystem::exists(dir / "p.src.ids"));
  EXPECT_TRUE(std::filesystem::exists(dir / "p.tgt.types"));
  EXPECT_EQ(std::filesystem::file_size(dir / "p.rec"), 12u);
  const EncodedSet back = read_encoded((dir / "p").string());
  EXPECT_EQ(back.src, e.src);
  EXPECT_EQ(back.tgt, e.tgt);
  EXPECT_EQ(back.record, e.record);
}

TEST(Binary, TruncatedIndexRejected) {
  const std::filesystem::path dir = test::temp_dir("truncated");
  const std::string stem = (dir / "s").string();
  write_stream(stem, {{{1, 2}, {4, 4}}});
  test::write_file(stem + ".idx", test::read_file(stem + ".idx").substr(0, 12));
  EXPECT_THROW(read_stream(stem), std::exception);
}

}  // namespace
}  // namespace brs
