//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/augment/augment.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "brs/molgraph/element.h"
#include "brs/rxn/apply.h"
#include "brs/util/random.h"

namespace brs {
namespace {

// Element carried by a primitive, or 0.
int element_of(const Primitive &p) {
  switch (p.kind) {
    case PrimitiveKind::kAtomicNumber:
    case PrimitiveKind::kAliphatic:
    case PrimitiveKind::kAromatic: return p.value;
    default: return 0;
  }
}

AtomExpr &site_expr(SmartsReaction &r, int atom) {
  if (atom < 0 || atom >= r.lhs.num_atoms()) throw AugmentError("atom index out of range");
  return r.lhs.atoms[atom];
}

Primitive &site_prim(SmartsReaction &r, int atom, int prim) {
  AtomExpr &e = site_expr(r, atom);
  if (prim < 0 || prim >= static_cast<int>(e.or_terms.size())) throw AugmentError("primitive index out of range");
  return e.or_terms[prim];
}

// Product-side atom sharing the map of reactant atom `atom`, or nullptr.
AtomExpr *mirror_of(SmartsReaction &r, int atom) {
  const int map = r.lhs.atoms[atom].map;
  if (map == 0) return nullptr;
  const int i = r.rhs.find_map(map);
  return i < 0 ? nullptr : &r.rhs.atoms[i];
}

// Replaces the primitive for element z on the mirrored site.
void mirror_replace(SmartsReaction &r, int atom, int z, const Primitive &with) {
  AtomExpr *m = mirror_of(r, atom);
  if (m == nullptr) return;
  for (Primitive &p : m->or_terms) {
    if (element_of(p) == z) {
      p = with;
      return;
    }
  }
  throw AugmentError("mirrored site missing");
}

void check_permutation(std::span<const int> order, std::size_t n) {
  if (order.size() != n) throw AugmentError("order is not a permutation");
  std::vector<bool> seen(n, false);
  for (int i : order) {
    if (i < 0 || i >= static_cast<int>(n) || seen[i]) throw AugmentError("order is not a permutation");
    seen[i] = true;
  }
}

bool is_identity(std::span<const int> order) {
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] != static_cast<int>(i)) return false;
  return true;
}

// Re-serializes, re-parses and checks the result against the base.
SmartsReaction finish(const SmartsReaction &base, const SmartsReaction &edited) {
  const std::string text = to_string(edited);
  if (text == to_string(base)) throw AugmentError("variant identical to base");
  try {
    return parse_reaction(text);
  } catch (const std::exception &e) {
    throw AugmentError(std::string("variant does not re-parse: ") + e.what());
  }
}

void append_ints(std::ostringstream &os, const std::vector<int> &v) {
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
}

// All permutations of 0..n-1 except the identity.
std::vector<std::vector<int>> non_identity_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  while (std::next_permutation(p.begin(), p.end())) out.push_back(p);
  return out;
}

}  // namespace

std::string signature(const AugmentationOp &op) {
  std::ostringstream os;
  switch (op.kind) {
    case OpKind::kSpecialize:
      os << "spec@" << op.atom << '.' << op.prim << ':' << (op.aromatic ? "arom" : "aliph");
      break;
    case OpKind::kGeneralize: os << "gen@" << op.atom << '.' << op.prim; break;
    case OpKind::kPermuteWithin: os << "perm@" << op.atom << ':'; append_ints(os, op.indices); break;
    case OpKind::kPermuteBetween: os << "permc:"; append_ints(os, op.indices); break;
    case OpKind::kCombine: os << "comb@" << op.atom << ':'; append_ints(os, op.indices); break;
  }
  return os.str();
}

std::string signature(std::span<const AugmentationOp> ops) {
  std::string out;
  for (const AugmentationOp &op : ops) {
    if (!out.empty()) out += '+';
    out += signature(op);
  }
  return out;
}

SmartsReaction specialize(const SmartsReaction &r, int atom, int prim, bool aromatic) {
  SmartsReaction out = r;
  Primitive &p = site_prim(out, atom, prim);
  if (p.kind != PrimitiveKind::kAtomicNumber) throw AugmentError("site is not an atomic-number primitive");
  const int z = p.value;
  if (!is_supported_element(z)) throw AugmentError("element has no symbol form");
  if (aromatic && !can_be_aromatic(z)) throw AugmentError("element has no aromatic form");
  const Primitive with{aromatic ? PrimitiveKind::kAromatic : PrimitiveKind::kAliphatic, z};
  p = with;
  mirror_replace(out, atom, z, with);
  return finish(r, out);
}

SmartsReaction generalize(const SmartsReaction &r, int atom, int prim) {
  SmartsReaction out = r;
  Primitive &p = site_prim(out, atom, prim);
  if (p.kind != PrimitiveKind::kAliphatic && p.kind != PrimitiveKind::kAromatic)
    throw AugmentError("site is not an element symbol");
  const int z = p.value;
  const Primitive with{PrimitiveKind::kAtomicNumber, z};
  p = with;
  mirror_replace(out, atom, z, with);
  return finish(r, out);
}

SmartsReaction permute_within(const SmartsReaction &r, int atom, std::span<const int> order) {
  SmartsReaction out = r;
  AtomExpr &e = site_expr(out, atom);
  check_permutation(order, e.or_terms.size());
  if (is_identity(order)) throw AugmentError("identity permutation");
  std::vector<Primitive> terms;
  for (int i : order) terms.push_back(e.or_terms[i]);
  e.or_terms = std::move(terms);
  return finish(r, out);
}

SmartsReaction permute_between(const SmartsReaction &r, std::span<const int> order) {
  SmartsReaction out = r;
  check_permutation(order, out.lhs.components.size());
  if (is_identity(order)) throw AugmentError("identity permutation");
  std::vector<PatternComponent> comps;
  for (int i : order) comps.push_back(r.lhs.components[i]);
  out.lhs.components = std::move(comps);
  return finish(r, out);
}

SmartsReaction combine(const SmartsReaction &r, int atom, std::span<const int> subset) {
  SmartsReaction out = r;
  AtomExpr &e = site_expr(out, atom);
  if (subset.empty()) throw AugmentError("empty subset");
  std::set<int> keep;
  for (int i : subset) {
    if (i < 0 || i >= static_cast<int>(e.or_terms.size())) throw AugmentError("subset not drawn from the OR list");
    if (!keep.insert(i).second) throw AugmentError("repeated subset index");
  }
  std::vector<Primitive> terms;
  std::set<int> elements;
  bool wildcard = false;
  for (int i : keep) {
    terms.push_back(e.or_terms[i]);
    const int z = element_of(e.or_terms[i]);
    if (z != 0) elements.insert(z);
    else if (e.or_terms[i].kind == PrimitiveKind::kWildcard) wildcard = true;
  }
  e.or_terms = std::move(terms);
  if (AtomExpr *m = mirror_of(out, atom); m != nullptr && !wildcard) {
    std::vector<Primitive> kept;
    for (const Primitive &p : m->or_terms) {
      const int z = element_of(p);
      if (z == 0 || elements.count(z)) kept.push_back(p);
    }
    if (kept.empty()) throw AugmentError("mirrored site missing");
    m->or_terms = std::move(kept);
  }
  return finish(r, out);
}

SmartsReaction apply_op(const SmartsReaction &r, const AugmentationOp &op) {
  switch (op.kind) {
    case OpKind::kSpecialize: return specialize(r, op.atom, op.prim, op.aromatic);
    case OpKind::kGeneralize: return generalize(r, op.atom, op.prim);
    case OpKind::kPermuteWithin: return permute_within(r, op.atom, op.indices);
    case OpKind::kPermuteBetween: return permute_between(r, op.indices);
    case OpKind::kCombine: return combine(r, op.atom, op.indices);
  }
  throw AugmentError("unknown op kind");
}

std::vector<AugmentationOp> candidate_ops(const SmartsReaction &r, std::span<const OpKind> kinds) {
  auto allowed = [&](OpKind k) { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); };
  std::vector<AugmentationOp> out;
  for (int a = 0; a < r.lhs.num_atoms(); ++a) {
    const std::vector<Primitive> &terms = r.lhs.atoms[a].or_terms;
    const int n = static_cast<int>(terms.size());
    for (int i = 0; i < n; ++i) {
      const Primitive &p = terms[i];
      if (allowed(OpKind::kSpecialize) && p.kind == PrimitiveKind::kAtomicNumber && is_supported_element(p.value)) {
        out.push_back({OpKind::kSpecialize, a, i, false, {}});
        if (can_be_aromatic(p.value)) out.push_back({OpKind::kSpecialize, a, i, true, {}});
      }
      if (allowed(OpKind::kGeneralize) &&
          (p.kind == PrimitiveKind::kAliphatic || p.kind == PrimitiveKind::kAromatic))
        out.push_back({OpKind::kGeneralize, a, i, false, {}});
    }
    if (n >= 2 && allowed(OpKind::kPermuteWithin))
      for (std::vector<int> &perm : non_identity_permutations(n))
        out.push_back({OpKind::kPermuteWithin, a, -1, false, std::move(perm)});
    if (n >= 2 && allowed(OpKind::kCombine)) {
      for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) subset.push_back(i);
        out.push_back({OpKind::kCombine, a, -1, false, std::move(subset)});
      }
    }
  }
  if (allowed(OpKind::kPermuteBetween) && r.lhs.num_components() >= 2)
    for (std::vector<int> &perm : non_identity_permutations(r.lhs.num_components()))
      out.push_back({OpKind::kPermuteBetween, -1, -1, false, std::move(perm)});
  return out;
}

bool passes_probe(const SmartsReaction &r) {
  const std::vector<Molecule> &probe = probe_molecules();
  for (const Molecule &m : probe) {
    try {
      if (!apply(r, std::span<const Molecule>(&m, 1), MatchMode::kIntra).empty()) return true;
    } catch (const std::exception &) {
      return false;
    }
  }
  return false;
}

std::vector<AugmentedTemplate> enumerate_variants(const SmartsReaction &r, const EnumerateOptions &options) {
  if (options.max_count < 1) return {};
  Rng rng(options.seed);
  std::vector<AugmentedTemplate> out;
  std::set<std::string> seen{to_string(r)};

  auto consider = [&](std::vector<AugmentationOp> ops, SmartsReaction result) {
    std::string text = to_string(result);
    if (!seen.insert(text).second) return;
    if (!passes_probe(result)) return;
    out.push_back({options.base_id, std::move(ops), std::move(result), std::move(text)});
  };
  auto full = [&] { return static_cast<int>(out.size()) >= options.max_count; };

  std::vector<AugmentationOp> singles = candidate_ops(r, options.kinds);
  seeded_shuffle(singles, rng);
  std::vector<std::pair<AugmentationOp, SmartsReaction>> firsts;
  for (const AugmentationOp &op : singles) {
    if (full()) return out;
    try {
      SmartsReaction v = apply_op(r, op);
      consider({op}, v);
      firsts.emplace_back(op, std::move(v));
    } catch (const AugmentError &) {
    }
  }
  if (options.max_chain < 2) return out;
  for (const auto &[op1, v1] : firsts) {
    std::vector<AugmentationOp> seconds = candidate_ops(v1, options.kinds);
    seeded_shuffle(seconds, rng);
    for (const AugmentationOp &op2 : seconds) {
      if (full()) return out;
      try {
        consider({op1, op2}, apply_op(v1, op2));
      } catch (const AugmentError &) {
      }
    }
  }
  return out;
}

std::vector<OpKind> parse_op_kinds(const std::string &spec) {
  std::vector<OpKind> out;
  auto add = [&](OpKind k) {
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  };
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = strip_whitespace(item);
    if (item == "spec") add(OpKind::kSpecialize);
    else if (item == "gen") add(OpKind::kGeneralize);
    else if (item == "perm") {
      add(OpKind::kPermuteWithin);
      add(OpKind::kPermuteBetween);
    } else if (item == "comb") add(OpKind::kCombine);
    else if (item == "all") {
      for (OpKind k : EnumerateOptions{}.kinds) add(k);
    } else throw AugmentError("unknown op kind '" + item + "'");
  }
  if (out.empty()) throw AugmentError("no op kinds given");
  return out;
}

}  // namespace brs
