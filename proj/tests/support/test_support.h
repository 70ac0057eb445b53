//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_TESTS_TEST_SUPPORT_H_
#define BRS_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "brs/dataset/source.h"
#include "brs/molgraph/canonical.h"
#include "brs/molgraph/element.h"
#include "brs/molgraph/molecule.h"
#include "brs/molgraph/smiles.h"
#include "brs/util/random.h"

namespace brs::test {

inline std::string data_path(const std::string &name) { return std::string(BRS_TEST_DATA) + "/" + name; }
inline std::string source_path(const std::string &name) { return std::string(BRS_SOURCE_DIR) + "/" + name; }

inline std::filesystem::path temp_dir(const std::string &name) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / ("brs_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

// First column of a SMILES file.
inline std::vector<std::string> read_smiles_column(const std::string &path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream f(line);
    std::string s;
    if (f >> s) out.push_back(s);
  }
  return out;
}

inline const std::vector<Molecule> &fixture_pool() {
  static const std::vector<Molecule> pool = [] {
    MoleculeSource src;
    src.path = data_path("evo_pool.smi");
    return load_molecules(src);
  }();
  return pool;
}

// Seeded sample of n pool molecules (with replacement).
inline std::vector<Molecule> sample_pool(std::size_t n, std::uint64_t seed) {
  const std::vector<Molecule> &pool = fixture_pool();
  Rng rng(seed);
  std::vector<Molecule> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(pool[random_index(rng, pool.size())]);
  return out;
}

inline std::vector<int> random_permutation(int n, Rng &rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  seeded_shuffle(p, rng);
  return p;
}

// Random connected molecule over C, N, O, S, F: a random tree with
// bond orders bounded by free valence, plus a few ring closures.
// Implicit hydrogens fill the default valence.
inline Molecule random_molecule(Rng &rng, int max_atoms = 12) {
  static const int kElements[] = {6, 6, 6, 6, 7, 7, 8, 8, 16, 9};
  auto max_valence = [](int z) { return neutral_valences(z).front(); };
  for (;;) {
    MolGraph g;
    const int n = 1 + static_cast<int>(random_index(rng, max_atoms));
    std::vector<int> used;
    auto free_of = [&](int a) { return max_valence(g.atoms[a].element) - used[a]; };
    g.add_atom({kElements[random_index(rng, std::size(kElements))], false, 0, 0, 0});
    used.push_back(0);
    for (int i = 1; i < n; ++i) {
      std::vector<int> open;
      for (int a = 0; a < i; ++a)
        if (free_of(a) > 0) open.push_back(a);
      if (open.empty()) break;
      const int parent = open[random_index(rng, open.size())];
      int z = kElements[random_index(rng, std::size(kElements))];
      const int cap = std::min(free_of(parent), max_valence(z));
      // Mostly single bonds.
      int o = 1;
      if (random_index(rng, 4) == 0) o = 1 + static_cast<int>(random_index(rng, std::min(cap, 3)));
      const int child = g.add_atom({z, false, 0, 0, 0});
      used.push_back(o);
      used[parent] += o;
      g.add_bond(parent, child, static_cast<BondOrder>(o));
    }
    const int closures = static_cast<int>(random_index(rng, 3));
    for (int c = 0; c < closures; ++c) {
      const int a = static_cast<int>(random_index(rng, g.atoms.size()));
      const int b = static_cast<int>(random_index(rng, g.atoms.size()));
      if (a == b || g.find_bond(a, b) >= 0 || free_of(a) < 1 || free_of(b) < 1) continue;
      g.add_bond(a, b, BondOrder::kSingle);
      ++used[a];
      ++used[b];
    }
    for (std::size_t a = 0; a < g.atoms.size(); ++a)
      g.atoms[a].implicit_h = max_valence(g.atoms[a].element) - used[a];
    try {
      return Molecule::from_graph(g);
    } catch (const ChemError &) {
    }
  }
}

}  // namespace brs::test

#endif  // BRS_TESTS_TEST_SUPPORT_H_
