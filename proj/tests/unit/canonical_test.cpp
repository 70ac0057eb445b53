//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include "brs/molgraph/canonical.h"
#include "brs/molgraph/smiles.h"
#include "test_support.h"

namespace brs {
namespace {

TEST(Canonical, KnownForms) {
  EXPECT_EQ(canonical_smiles("OCC"), canonical_smiles("CCO"));
  EXPECT_EQ(canonical_smiles("C(C)O"), canonical_smiles("CCO"));
  EXPECT_EQ(canonical_smiles("c1ccccc1C"), canonical_smiles("Cc1ccccc1"));
  EXPECT_NE(canonical_smiles("CCO"), canonical_smiles("COC"));
  EXPECT_NE(canonical_smiles("CC=O"), canonical_smiles("C=CO"));
}

TEST(Canonical, FragmentOrderIrrelevant) {
  EXPECT_EQ(canonical_smiles("CCO.N"), canonical_smiles("N.OCC"));
}

TEST(Canonical, FixtureRows) {
  std::ifstream in(test::data_path("canon_fixture.tsv"));
  ASSERT_TRUE(in);
  std::string line;
  int rows = 0;
  while (std::getline(in, line) && rows < 2000) {
    std::istringstream f(line);
    std::vector<std::string> forms;
    for (std::string s; std::getline(f, s, '\t');) forms.push_back(s);
    ASSERT_GE(forms.size(), 2u);
    const std::string c = canonical_smiles(forms[0]);
    for (const std::string &s : forms) EXPECT_EQ(canonical_smiles(s), c) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 2000);
}

TEST(CanonicalProperty, FixedPoint) {
  Rng rng(101);
  for (int i = 0; i < 500; ++i) {
    const std::string c = write_canonical(test::random_molecule(rng, 16));
    EXPECT_EQ(canonical_smiles(c), c);
  }
}

TEST(CanonicalProperty, RelabelingInvariance) {
  Rng rng(202);
  for (int i = 0; i < 500; ++i) {
    const Molecule m = test::random_molecule(rng, 16);
    const Molecule p = permute_atoms(m, test::random_permutation(m.num_atoms(), rng));
    EXPECT_EQ(write_canonical(p), write_canonical(m));
  }
}

TEST(CanonicalProperty, RandomizedSmilesAgree) {
  Rng rng(303);
  for (int i = 0; i < 300; ++i) {
    const Molecule m = test::random_molecule(rng, 16);
    const std::string c = write_canonical(m);
    for (int k = 0; k < 4; ++k) EXPECT_EQ(canonical_smiles(randomized_smiles(m, rng())), c);
  }
}

TEST(RandomizedSmiles, SeedDeterminesOutput) {
  const Molecule m = parse_smiles("CC(C)c1ccc(O)cc1N");
  EXPECT_EQ(randomized_smiles(m, 7), randomized_smiles(m, 7));
  std::set<std::string> seen;
  for (std::uint64_t s = 0; s < 32; ++s) seen.insert(randomized_smiles(m, s));
  EXPECT_GT(seen.size(), 1u);
}

TEST(CanonicalRanks, SymmetricGraphGetsPermutation) {
  const Molecule m = parse_smiles("C1CCCCC1");
  const LabeledGraph g = labeled_graph(m);
  std::vector<int> ranks = canonical_ranks(g, [&](const std::vector<int> &r, std::vector<int> &order) {
    return write_smiles(m, r, &order);
  });
  std::sort(ranks.begin(), ranks.end());
  for (int i = 0; i < m.num_atoms(); ++i) EXPECT_EQ(ranks[i], i);
}

}  // namespace
}  // namespace brs
