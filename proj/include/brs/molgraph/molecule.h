//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_MOLGRAPH_MOLECULE_H_
#define BRS_MOLGRAPH_MOLECULE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace brs {

class ChemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValenceError : public ChemError {
 public:
  using ChemError::ChemError;
};

class KekulizeError : public ChemError {
 public:
  using ChemError::ChemError;
};

enum class BondOrder : std::uint8_t {
  kSingle = 1,
  kDouble = 2,
  kTriple = 3,
  kAromatic = 4,
};

// Bond order contribution to valence; aromatic bonds count as one (the
// extra electron is accounted for separately by kekulization).
inline int valence_contribution(BondOrder order) {
  return order == BondOrder::kAromatic ? 1 : static_cast<int>(order);
}

struct Atom {
  int element = 6;
  bool aromatic = false;
  int charge = 0;
  int implicit_h = 0;
  int isotope = 0;

  bool operator==(const Atom &) const = default;
};

struct Bond {
  int begin = 0;
  int end = 0;
  BondOrder order = BondOrder::kSingle;

  int other(int atom) const { return atom == begin ? end : begin; }
};

struct Neighbor {
  int atom;
  int bond;
};

// Plain, mutable molecular graph. Used by the SMILES reader and by the
// reaction rewriter before a Molecule is assembled from it.
struct MolGraph {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;

  int add_atom(const Atom &atom);
  int add_bond(int a, int b, BondOrder order);
  // Index of the bond between a and b, or -1.
  int find_bond(int a, int b) const;
  // Sum of bond-order contributions at an atom.
  int bond_sum(int atom) const;
};

struct BuildOptions {
  // Drop input aromatic flags on atoms and re-perceive rings from the
  // Kekule structure. When false, atom flags are kept as metadata and
  // aromatic bonds are not allowed in the input.
  bool perceive_aromaticity = true;
};

// Immutable molecular graph: atoms, bonds, adjacency, ring membership and
// a stored Kekule assignment for every aromatic bond.
class Molecule {
 public:
  Molecule() = default;

  // Assembles a molecule from a graph whose implicit hydrogen counts are
  // already set. Aromatic bonds are kekulized, valences are checked and
  // aromaticity is perceived.
  //
  // Throws ValenceError, KekulizeError or ChemError (malformed graph).
  static Molecule from_graph(MolGraph graph, const BuildOptions &options = {});

  int num_atoms() const { return static_cast<int>(atoms_.size()); }
  int num_bonds() const { return static_cast<int>(bonds_.size()); }
  bool empty() const { return atoms_.empty(); }

  const Atom &atom(int i) const { return atoms_[i]; }
  const Bond &bond(int i) const { return bonds_[i]; }
  std::span<const Atom> atoms() const { return atoms_; }
  std::span<const Bond> bonds() const { return bonds_; }

  std::span<const Neighbor> neighbors(int atom) const {
    return {adj_.data() + adj_offset_[atom], adj_.data() + adj_offset_[atom + 1]};
  }
  int degree(int atom) const { return adj_offset_[atom + 1] - adj_offset_[atom]; }
  int find_bond(int a, int b) const;

  // Single or double for bonds that are aromatic; the bond order otherwise.
  BondOrder kekule_order(int bond) const { return kekule_[bond]; }

  bool atom_in_ring(int atom) const { return atom_ring_count_[atom] > 0; }
  int atom_ring_count(int atom) const { return atom_ring_count_[atom]; }
  bool bond_in_ring(int bond) const { return bond_in_ring_[bond]; }
  // Smallest set of smallest rings, as ordered atom cycles.
  const std::vector<std::vector<int>> &sssr() const { return sssr_; }

  // Atom indices of each connected component, in order of lowest index.
  std::vector<std::vector<int>> fragments() const;
  int num_fragments() const;

  // Copy of the graph. With kekule = true, aromatic bonds carry their
  // Kekule orders; atom aromatic flags are always copied.
  MolGraph to_graph(bool kekule = false) const;

  // Total hydrogen-inclusive valence computed from Kekule orders.
  int kekule_valence(int atom) const;

 private:
  void build_adjacency();

  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<BondOrder> kekule_;
  std::vector<int> adj_offset_;
  std::vector<Neighbor> adj_;
  std::vector<int> atom_ring_count_;
  std::vector<bool> bond_in_ring_;
  std::vector<std::vector<int>> sssr_;
};

// Copy of m with every aromatic bond replaced by its Kekule single/double
// assignment. Atom aromatic flags are retained.
Molecule kekulize(const Molecule &m);

// Reorders atoms: atom i of m becomes atom perm[i] of the result.
Molecule permute_atoms(const Molecule &m, std::span<const int> perm);

}  // namespace brs

#endif  // BRS_MOLGRAPH_MOLECULE_H_
