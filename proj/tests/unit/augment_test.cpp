//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include "brs/augment/augment.h"
#include "brs/molgraph/smiles.h"
#include "brs/rxn/apply.h"
#include "brs/rxn/registry.h"
#include "test_support.h"

namespace brs {
namespace {

const Registry &reg() {
  static const Registry r = Registry::builtin();
  return r;
}

std::vector<std::string> run(const SmartsReaction &r, const Molecule &m) {
  return brs::apply(r, std::span<const Molecule>(&m, 1));
}

bool subset(const std::vector<std::string> &a, const std::vector<std::string> &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

TEST(Augment, SpecializeMirrorsOntoProductSide) {
  // template 1: [#6,#7,#8;h:1].[O,N,F,C:2]>>[#6,#7,#8:1][O,N,F,C:2]
  const SmartsReaction s = specialize(reg().at(1), 0, 1, false);
  EXPECT_EQ(to_string(s), "[#6,N,#8;h:1].[O,N,F,C:2]>>[#6,N,#8:1][O,N,F,C:2]");
  const SmartsReaction a = specialize(reg().at(1), 0, 0, true);
  EXPECT_EQ(to_string(a), "[c,#7,#8;h:1].[O,N,F,C:2]>>[c,#7,#8:1][O,N,F,C:2]");
}

TEST(Augment, GeneralizeMirrors) {
  const SmartsReaction g = generalize(reg().at(2), 0, 0);
  EXPECT_EQ(to_string(g), "[#8,N,C;h:1][O,N,C;h:2]>>[#8,N,C:1]=[O,N,C:2]");
}

TEST(Augment, PermuteAndCombine) {
  const std::vector<int> order = {2, 0, 1};
  EXPECT_EQ(to_string(permute_within(reg().at(2), 1, order)), "[O,N,C;h:1][C,O,N;h:2]>>[O,N,C:1]=[O,N,C:2]");
  const std::vector<int> swap = {1, 0};
  EXPECT_EQ(to_string(permute_between(reg().at(1), swap)), "[O,N,F,C:2].[#6,#7,#8;h:1]>>[#6,#7,#8:1][O,N,F,C:2]");
  const std::vector<int> keep = {2};
  EXPECT_EQ(to_string(combine(reg().at(2), 0, keep)), "[C;h:1][O,N,C;h:2]>>[C:1]=[O,N,C:2]");
}

TEST(Augment, RejectsNoOpsAndBadSites) {
  const std::vector<int> identity = {0, 1, 2};
  EXPECT_THROW(permute_within(reg().at(2), 0, identity), AugmentError);
  EXPECT_THROW(generalize(reg().at(5), 0, 0), AugmentError);  // already #6
  EXPECT_THROW(specialize(reg().at(2), 0, 0, false), AugmentError);
  const std::vector<int> all = {0, 1, 2};
  EXPECT_THROW(combine(reg().at(2), 0, all), AugmentError);
}

TEST(Augment, Signatures) {
  AugmentationOp op;
  op.kind = OpKind::kSpecialize;
  op.atom = 0;
  op.prim = 1;
  op.aromatic = true;
  EXPECT_EQ(signature(op), "spec@0.1:arom");
  AugmentationOp g{OpKind::kGeneralize, 2, 0, false, {}};
  EXPECT_EQ(signature(std::vector<AugmentationOp>{op, g}), "spec@0.1:arom+gen@2.0");
}

TEST(Augment, ParseOpKinds) {
  EXPECT_EQ(parse_op_kinds("spec").size(), 1u);
  EXPECT_EQ(parse_op_kinds("perm").size(), 2u);
  EXPECT_EQ(parse_op_kinds("all").size(), 5u);
  EXPECT_EQ(parse_op_kinds("spec,gen").size(), 2u);
  EXPECT_THROW(parse_op_kinds("bogus"), std::exception);
}

TEST(Augment, ProbeSet) {
  EXPECT_EQ(probe_molecules().size(), 50u);
  for (int id = 1; id <= reg().size(); ++id) EXPECT_TRUE(passes_probe(reg().at(id))) << id;
}

TEST(Augment, EnumerationIsDeterministic) {
  EnumerateOptions o;
  o.seed = 9;
  o.max_count = 8;
  for (int id : {1, 2, 7, 14}) {
    const std::vector<AugmentedTemplate> a = enumerate_variants(reg().at(id), o);
    const std::vector<AugmentedTemplate> b = enumerate_variants(reg().at(id), o);
    ASSERT_EQ(a.size(), b.size());
    std::set<std::string> texts;
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].text, b[i].text);
      EXPECT_NE(a[i].text, to_string(reg().at(id)));
      EXPECT_LE(a[i].ops.size(), 2u);
      texts.insert(a[i].text);
    }
    EXPECT_EQ(texts.size(), a.size());
  }
}

TEST(Augment, CandidateOpsApply) {
  for (int id = 1; id <= reg().size(); ++id) {
    const std::vector<OpKind> kinds = parse_op_kinds("all");
    for (const AugmentationOp &op : candidate_ops(reg().at(id), kinds)) {
      SmartsReaction out;
      try {
        out = apply_op(reg().at(id), op);
      } catch (const AugmentError &) {
        continue;
      }
      EXPECT_NE(to_string(out), to_string(reg().at(id))) << signature(op);
    }
  }
}

// Set relations against the base template on random molecules.
class AugmentRelation : public ::testing::TestWithParam<OpKind> { };

TEST_P(AugmentRelation, ProductSetsRelate) {
  Rng rng(41 + static_cast<int>(GetParam()));
  std::vector<Molecule> mols;
  for (int i = 0; i < 60; ++i) mols.push_back(test::random_molecule(rng));
  const std::vector<Molecule> pool = test::sample_pool(40, 5);
  mols.insert(mols.end(), pool.begin(), pool.end());
  for (int id = 2; id <= reg().size(); ++id) {
    EnumerateOptions o;
    o.kinds = {GetParam()};
    o.max_chain = 1;
    o.max_count = 4;
    o.seed = id;
    for (const AugmentedTemplate &v : enumerate_variants(reg().at(id), o)) {
      for (const Molecule &m : mols) {
        const std::vector<std::string> base = run(reg().at(id), m);
        const std::vector<std::string> got = run(v.result, m);
        switch (GetParam()) {
          case OpKind::kPermuteWithin:
          case OpKind::kPermuteBetween:
            EXPECT_EQ(got, base) << v.text;
            break;
          case OpKind::kSpecialize:
          case OpKind::kCombine:
            EXPECT_TRUE(subset(got, base)) << v.text;
            break;
          case OpKind::kGeneralize:
            EXPECT_TRUE(subset(base, got)) << v.text;
            break;
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Kinds, AugmentRelation,
                         ::testing::Values(OpKind::kSpecialize, OpKind::kGeneralize, OpKind::kPermuteWithin,
                                           OpKind::kCombine));

}  // namespace
}  // namespace brs
