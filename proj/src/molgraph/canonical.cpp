//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/molgraph/canonical.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "brs/molgraph/smiles.h"

namespace brs {
namespace {

class DfsWriter {
 public:
  DfsWriter(const LabeledGraph &g, const std::vector<int> &priority, const AtomText &atom_text,
            const BondText &bond_text)
      : g_(g), priority_(priority), atom_text_(atom_text), bond_text_(bond_text),
        visit_index_(g.size(), -1), children_(g.size()), rings_(g.size()) { }

  std::string write(std::vector<int> *order) {
    std::vector<int> roots(g_.size());
    std::iota(roots.begin(), roots.end(), 0);
    std::sort(roots.begin(), roots.end(), [&](int a, int b) { return priority_[a] < priority_[b]; });
    std::string out;
    for (int root : roots) {
      if (visit_index_[root] >= 0) continue;
      discover(root, -1);
      if (!out.empty()) out += '.';
      used_digits_.assign(used_digits_.size(), false);
      emit(root, -1, out);
    }
    if (order != nullptr) *order = visited_;
    return out;
  }

 private:
  struct RingEnd {
    int partner;
    int label;
    bool opening;
  };

  std::vector<std::pair<int, int>> sorted_neighbors(int a) const {
    std::vector<std::pair<int, int>> nbs = g_.adj[a];
    std::sort(nbs.begin(), nbs.end(),
              [&](const auto &x, const auto &y) { return priority_[x.first] < priority_[y.first]; });
    return nbs;
  }

  void discover(int a, int parent) {
    visit_index_[a] = static_cast<int>(visited_.size());
    visited_.push_back(a);
    for (const auto &[nb, label] : sorted_neighbors(a)) {
      if (nb == parent) continue;
      if (visit_index_[nb] >= 0) {
        auto key = std::minmax(a, nb);
        if (!ring_bonds_.insert(key).second) continue;
        rings_[nb].push_back({a, label, true});
        rings_[a].push_back({nb, label, false});
        continue;
      }
      children_[a].push_back({nb, label});
      discover(nb, a);
    }
  }

  int take_digit() {
    for (std::size_t d = 1; d < used_digits_.size(); ++d) {
      if (!used_digits_[d]) {
        used_digits_[d] = true;
        return static_cast<int>(d);
      }
    }
    used_digits_.push_back(true);
    return static_cast<int>(used_digits_.size()) - 1;
  }

  static std::string digit_text(int d) {
    return d < 10 ? std::to_string(d) : "%" + std::to_string(d);
  }

  void emit(int a, int in_label, std::string &out) {
    if (in_label >= 0) out += bond_text_(in_label);
    out += atom_text_(a);

    std::vector<RingEnd> closing, opening;
    for (const RingEnd &r : rings_[a]) (r.opening ? opening : closing).push_back(r);
    // Closures in the order their digits were opened, openings by partner
    // priority; closed digits become free only after this atom.
    std::sort(closing.begin(), closing.end(),
              [&](const RingEnd &x, const RingEnd &y) { return visit_index_[x.partner] < visit_index_[y.partner]; });
    std::sort(opening.begin(), opening.end(),
              [&](const RingEnd &x, const RingEnd &y) { return priority_[x.partner] < priority_[y.partner]; });
    std::vector<int> released;
    for (const RingEnd &r : closing) {
      const int d = open_digit_.at(std::minmax(a, r.partner));
      out += digit_text(d);
      released.push_back(d);
    }
    for (const RingEnd &r : opening) {
      const int d = take_digit();
      open_digit_[std::minmax(a, r.partner)] = d;
      out += bond_text_(r.label);
      out += digit_text(d);
    }
    for (int d : released) used_digits_[d] = false;

    const auto &kids = children_[a];
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const bool branch = i + 1 < kids.size();
      if (branch) out += '(';
      emit(kids[i].first, kids[i].second, out);
      if (branch) out += ')';
    }
  }

  const LabeledGraph &g_;
  const std::vector<int> &priority_;
  const AtomText &atom_text_;
  const BondText &bond_text_;
  std::vector<int> visit_index_;
  std::vector<int> visited_;
  std::vector<std::vector<std::pair<int, int>>> children_;
  std::vector<std::vector<RingEnd>> rings_;
  std::set<std::pair<int, int>> ring_bonds_;
  std::map<std::pair<int, int>, int> open_digit_;
  std::vector<bool> used_digits_ = std::vector<bool>(10, false);
};

// Class values are "number of vertices in strictly smaller classes", so a
// singleton cell's value is the vertex's final rank.
int assign_classes(std::vector<int> &cls, const std::vector<int> &idx,
                   const std::function<bool(int, int)> &less) {
  int distinct = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i == 0 || less(idx[i - 1], idx[i])) {
      cls[idx[i]] = static_cast<int>(i);
      ++distinct;
    } else {
      cls[idx[i]] = cls[idx[i - 1]];
    }
  }
  return distinct;
}

int count_distinct(const std::vector<int> &cls) {
  std::vector<int> c(cls);
  std::sort(c.begin(), c.end());
  return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
}

void refine(const LabeledGraph &g, std::vector<int> &cls) {
  const int n = g.size();
  std::vector<int> idx(n);
  int distinct = count_distinct(cls);
  std::vector<std::vector<std::pair<int, int>>> sig(n);
  while (distinct < n) {
    for (int a = 0; a < n; ++a) {
      sig[a].clear();
      for (const auto &[nb, label] : g.adj[a]) sig[a].push_back({label, cls[nb]});
      std::sort(sig[a].begin(), sig[a].end());
    }
    std::iota(idx.begin(), idx.end(), 0);
    auto less = [&](int x, int y) { return std::tie(cls[x], sig[x]) < std::tie(cls[y], sig[y]); };
    std::sort(idx.begin(), idx.end(), less);
    std::vector<int> next(n);
    const int d = assign_classes(next, idx, less);
    cls.swap(next);
    if (d == distinct) break;
    distinct = d;
  }
}

class CanonSearch {
 public:
  CanonSearch(const LabeledGraph &g, const LeafWriter &writer) : g_(g), writer_(writer) { }

  std::vector<int> run(std::string *best) {
    const int n = g_.size();
    std::vector<int> cls(n), idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    auto less = [&](int x, int y) { return g_.keys[x] < g_.keys[y]; };
    std::sort(idx.begin(), idx.end(), less);
    assign_classes(cls, idx, less);
    std::vector<int> prefix;
    search(cls, prefix);
    if (best != nullptr) *best = best_string_;
    return best_ranks_;
  }

 private:
  static constexpr long kMaxLeaves = 20000;

  void search(std::vector<int> cls, std::vector<int> &prefix) {
    refine(g_, cls);
    const int n = g_.size();
    // First non-singleton cell: smallest class value shared by 2+ vertices.
    std::vector<int> count(n, 0);
    for (int c : cls) ++count[c];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (count[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(cls);
      return;
    }
    std::vector<int> cell;
    for (int a = 0; a < n; ++a)
      if (cls[a] == target) cell.push_back(a);
    std::vector<int> explored;
    for (int v : cell) {
      if (leaves_ >= kMaxLeaves) return;
      if (!explored.empty() && same_orbit(v, explored, prefix, n)) continue;
      std::vector<int> child(cls);
      for (int u : cell)
        if (u != v) child[u] = target + 1;
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  bool same_orbit(int v, const std::vector<int> &explored, const std::vector<int> &prefix, int n) {
    if (automorphisms_.empty()) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (const auto &perm : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return perm[p] == p; });
      if (!fixes) continue;
      for (int a = 0; a < n; ++a) parent[find(a)] = find(perm[a]);
    }
    const int root = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int e) { return find(e) == root; });
  }

  void leaf(const std::vector<int> &ranks) {
    ++leaves_;
    std::vector<int> order;
    std::string s = writer_(ranks, order);
    if (best_ranks_.empty() || s < best_string_) {
      best_string_ = std::move(s);
      best_ranks_ = ranks;
      best_order_ = std::move(order);
    } else if (s == best_string_ && order.size() == best_order_.size()) {
      std::vector<int> perm(ranks.size());
      std::iota(perm.begin(), perm.end(), 0);
      for (std::size_t k = 0; k < order.size(); ++k) perm[best_order_[k]] = order[k];
      automorphisms_.push_back(std::move(perm));
    }
  }

  const LabeledGraph &g_;
  const LeafWriter &writer_;
  long leaves_ = 0;
  std::string best_string_;
  std::vector<int> best_ranks_;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

std::string write_dfs(const LabeledGraph &g, const std::vector<int> &priority,
                      const AtomText &atom_text, const BondText &bond_text,
                      std::vector<int> *order) {
  return DfsWriter(g, priority, atom_text, bond_text).write(order);
}

std::vector<int> canonical_ranks(const LabeledGraph &g, const LeafWriter &writer,
                                 std::string *best) {
  if (g.size() == 0) {
    if (best != nullptr) best->clear();
    return {};
  }
  return CanonSearch(g, writer).run(best);
}

std::string canonical_smiles(std::string_view smiles) { return write_canonical(parse_smiles(smiles)); }

}  // namespace brs
