//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_AUGMENT_AUGMENT_H_
#define BRS_AUGMENT_AUGMENT_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "brs/molgraph/molecule.h"
#include "brs/rxn/reaction.h"

namespace brs {

class AugmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OpKind {
  kSpecialize,      // #n -> aliphatic or aromatic symbol
  kGeneralize,      // symbol -> #n
  kPermuteWithin,   // reorder one OR list
  kPermuteBetween,  // reorder the reactant-side components
  kCombine,         // keep a proper subset of one OR list
};

// One edit. Sites are reactant-side atom indices (parse order) and
// indices into that atom's OR list.
struct AugmentationOp {
  OpKind kind = OpKind::kSpecialize;
  int atom = -1;
  int prim = -1;
  bool aromatic = false;     // kSpecialize: lowercase form
  std::vector<int> indices;  // permutation (kPermute*) or kept subset (kCombine)

  bool operator==(const AugmentationOp &) const = default;
};

// Compact text form, e.g. "spec@0.1:arom", "gen@1.0", "perm@0:2,0,1",
// "permc:1,0", "comb@0:0,2".
std::string signature(const AugmentationOp &op);
// Signatures joined by '+'.
std::string signature(std::span<const AugmentationOp> ops);

struct AugmentedTemplate {
  int base_id = 0;
  std::vector<AugmentationOp> ops;
  SmartsReaction result;
  std::string text;  // whitespace-free serialization
};

// The single edits. Each mirrors onto the product-side atom with the same
// map (matching the edited element), or touches only the reactant side
// when that map does not survive. Results are re-parsed and validated.
// Throws AugmentError for precondition violations and for results
// identical to the input.
SmartsReaction specialize(const SmartsReaction &r, int atom, int prim, bool aromatic);
SmartsReaction generalize(const SmartsReaction &r, int atom, int prim);
SmartsReaction permute_within(const SmartsReaction &r, int atom, std::span<const int> order);
SmartsReaction permute_between(const SmartsReaction &r, std::span<const int> order);
SmartsReaction combine(const SmartsReaction &r, int atom, std::span<const int> subset);
SmartsReaction apply_op(const SmartsReaction &r, const AugmentationOp &op);

// Every single edit of the allowed kinds that is applicable to r.
std::vector<AugmentationOp> candidate_ops(const SmartsReaction &r, std::span<const OpKind> kinds);

struct EnumerateOptions {
  std::vector<OpKind> kinds = {OpKind::kSpecialize, OpKind::kGeneralize, OpKind::kPermuteWithin,
                               OpKind::kPermuteBetween, OpKind::kCombine};
  int max_count = 10;
  std::uint64_t seed = 0;
  int base_id = 0;
  int max_chain = 2;  // ops per variant
};

// Seeded sample of distinct variants, each re-parsed, validated, and
// checked to rewrite at least one probe molecule. May return fewer than
// max_count when the candidates run out.
std::vector<AugmentedTemplate> enumerate_variants(const SmartsReaction &r, const EnumerateOptions &options);

// True when r yields a product for at least one probe molecule.
bool passes_probe(const SmartsReaction &r);

// Fixed 50-molecule probe set (C, N, O, F, S; rings of size 3-8, aromatic
// and aliphatic, multiple bonds).
const std::vector<Molecule> &probe_molecules();

// Parses "spec,gen,perm,comb" (perm covers both permutation kinds).
std::vector<OpKind> parse_op_kinds(const std::string &spec);

}  // namespace brs

#endif  // BRS_AUGMENT_AUGMENT_H_
