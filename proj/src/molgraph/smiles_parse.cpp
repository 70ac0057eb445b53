//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cctype>
#include <map>
#include <optional>

#include "brs/molgraph/element.h"
#include "brs/molgraph/smiles.h"

namespace brs {
namespace {

struct RingBond {
  int atom;
  std::optional<BondOrder> order;
  std::size_t offset;
};

class SmilesReader {
 public:
  explicit SmilesReader(std::string_view text) : text_(text) { }

  Molecule read() {
    if (text_.empty()) throw SmilesParseError("empty SMILES", 0);
    std::vector<int> branch_stack;
    int prev = -1;
    std::size_t pending_at = 0;
    bool after_dot = false;

    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') {
        if (prev < 0 || pending_) fail("unexpected '('");
        branch_stack.push_back(prev);
        ++pos_;
      } else if (c == ')') {
        if (branch_stack.empty()) fail("unbalanced ')'");
        if (pending_) fail("bond before ')'");
        prev = branch_stack.back();
        branch_stack.pop_back();
        ++pos_;
      } else if (c == '.') {
        if (prev < 0 || pending_ || !branch_stack.empty()) fail("unexpected '.'");
        prev = -1;
        after_dot = true;
        ++pos_;
      } else if (c == '-' || c == '=' || c == '#' || c == ':' || c == '/' || c == '\\') {
        if (prev < 0 || pending_) fail("unexpected bond symbol");
        pending_ = bond_symbol(c);
        pending_at = pos_++;
      } else if (c == '$') {
        fail("quadruple bonds are not supported");
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '%') {
        if (prev < 0) fail("ring closure without atom");
        const std::size_t at = pos_;
        int digit = read_ring_number();
        ring_closure(prev, digit, pending_, at);
        pending_.reset();
      } else {
        int atom = read_atom();
        if (prev >= 0) connect(prev, atom, pending_, pending_at);
        else if (pending_) fail("bond without preceding atom");
        pending_.reset();
        prev = atom;
        after_dot = false;
      }
    }
    if (pending_) fail("dangling bond");
    if (after_dot) fail("dangling '.'");
    if (!branch_stack.empty()) fail("unclosed '('");
    if (!open_rings_.empty())
      throw SmilesParseError("unclosed ring " + std::to_string(open_rings_.begin()->first),
                             open_rings_.begin()->second.offset);
    assign_hydrogens();
    return Molecule::from_graph(std::move(graph_));
  }

 private:
  [[noreturn]] void fail(const std::string &msg) const { throw SmilesParseError(msg, pos_); }

  static BondOrder bond_symbol(char c) {
    switch (c) {
    case '=':
      return BondOrder::kDouble;
    case '#':
      return BondOrder::kTriple;
    case ':':
      return BondOrder::kAromatic;
    default:
      return BondOrder::kSingle;
    }
  }

  BondOrder implicit_order(int a, int b) const {
    return graph_.atoms[a].aromatic && graph_.atoms[b].aromatic ? BondOrder::kAromatic
                                                                : BondOrder::kSingle;
  }

  void connect(int a, int b, std::optional<BondOrder> order, std::size_t at) {
    if (graph_.find_bond(a, b) >= 0) throw SmilesParseError("duplicate bond", at);
    graph_.add_bond(a, b, order.value_or(implicit_order(a, b)));
  }

  int read_ring_number() {
    if (text_[pos_] != '%') return text_[pos_++] - '0';
    ++pos_;
    if (pos_ + 1 >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))
      fail("malformed '%' ring closure");
    int v = (text_[pos_] - '0') * 10 + (text_[pos_ + 1] - '0');
    pos_ += 2;
    return v;
  }

  void ring_closure(int atom, int digit, std::optional<BondOrder> order, std::size_t at) {
    auto it = open_rings_.find(digit);
    if (it == open_rings_.end()) {
      open_rings_.emplace(digit, RingBond {atom, order, at});
      return;
    }
    RingBond open = it->second;
    open_rings_.erase(it);
    if (open.atom == atom) throw SmilesParseError("ring closure to the same atom", at);
    if (open.order && order && *open.order != *order)
      throw SmilesParseError("conflicting ring closure bonds", at);
    connect(open.atom, atom, order ? order : open.order, at);
  }

  int read_atom() {
    const std::size_t start = pos_;
    if (text_[pos_] == '[') return read_bracket_atom();
    if (text_[pos_] == '*') fail("wildcard atoms are not supported");
    Atom atom;
    std::string_view rest = text_.substr(pos_);
    int z = 0;
    std::size_t len = 0;
    if (rest.starts_with("Cl") || rest.starts_with("Br")) {
      z = atomic_number(rest.substr(0, 2));
      len = 2;
    } else if (std::isalpha(static_cast<unsigned char>(rest[0]))) {
      const char ch = rest[0];
      if (std::islower(static_cast<unsigned char>(ch))) {
        const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        z = atomic_number(std::string_view(&up, 1));
        atom.aromatic = true;
        if (z != 0 && !can_be_aromatic(z)) z = 0;
      } else {
        z = atomic_number(rest.substr(0, 1));
      }
      len = 1;
      if (z == 0 || !is_organic_subset(z)) {
        if (std::isupper(static_cast<unsigned char>(ch)))
          throw UnsupportedElementError("element outside the organic subset needs brackets",
                                        start);
        fail("unexpected character '" + std::string(1, ch) + "'");
      }
    } else {
      fail("unexpected character '" + std::string(1, rest[0]) + "'");
    }
    pos_ += len;
    atom.element = z;
    atom.implicit_h = -1;  // inferred after all bonds are known
    return graph_.add_atom(atom);
  }

  int read_number() {
    int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      v = v * 10 + (text_[pos_++] - '0');
    return v;
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  int read_bracket_atom() {
    const std::size_t open = pos_++;
    Atom atom;
    if (at_digit()) atom.isotope = read_number();
    if (pos_ >= text_.size()) fail("unterminated bracket atom");

    const std::size_t sym_at = pos_;
    std::string_view rest = text_.substr(pos_);
    int z = 0;
    if (rest.starts_with("se") || rest.starts_with("as")) {
      z = rest[0] == 's' ? 34 : 33;
      atom.aromatic = true;
      pos_ += 2;
    } else if (std::islower(static_cast<unsigned char>(rest[0]))) {
      const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(rest[0])));
      z = atomic_number(std::string_view(&up, 1));
      if (z == 0 || !can_be_aromatic(z)) fail("invalid aromatic symbol");
      atom.aromatic = true;
      ++pos_;
    } else if (std::isupper(static_cast<unsigned char>(rest[0]))) {
      std::size_t len = 1;
      if (rest.size() > 1 && std::islower(static_cast<unsigned char>(rest[1]))) {
        // Two-letter symbol when it exists; otherwise the lowercase letter
        // belongs to something else (there is none in bracket grammar).
        len = 2;
      }
      z = atomic_number(rest.substr(0, len));
      if (z == 0 && len == 2 && rest[0] != 'H') {
        throw UnsupportedElementError("unsupported element '" + std::string(rest.substr(0, 2)) + "'",
                                      sym_at);
      }
      if (z == 0) {
        len = 1;
        z = atomic_number(rest.substr(0, 1));
      }
      if (z == 0)
        throw UnsupportedElementError("unsupported element '" + std::string(rest.substr(0, len)) + "'",
                                      sym_at);
      pos_ += len;
    } else if (rest[0] == '*') {
      fail("wildcard atoms are not supported");
    } else {
      fail("expected element symbol");
    }
    atom.element = z;

    while (pos_ < text_.size() && text_[pos_] == '@') ++pos_;
    for (std::string_view tag : {"TH", "AL", "SP", "TB", "OH"}) {
      if (text_.substr(pos_).starts_with(tag) && pos_ > sym_at && text_[pos_ - 1] == '@') {
        pos_ += 2;
        read_number();
      }
    }

    if (pos_ < text_.size() && text_[pos_] == 'H') {
      ++pos_;
      atom.implicit_h = at_digit() ? read_number() : 1;
    }
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      const char sign = text_[pos_];
      int magnitude = 0;
      if (at_digit_after()) {
        ++pos_;
        magnitude = read_number();
      } else {
        while (pos_ < text_.size() && text_[pos_] == sign) {
          ++magnitude;
          ++pos_;
        }
      }
      atom.charge = sign == '+' ? magnitude : -magnitude;
    }
    if (pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      if (!at_digit()) fail("expected atom class");
      read_number();
    }
    if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
    ++pos_;
    if (!is_supported_element(z)) throw UnsupportedElementError("unsupported element", open);
    return graph_.add_atom(atom);
  }

  bool at_digit_after() const {
    return pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
  }

  void assign_hydrogens() {
    for (int a = 0; a < static_cast<int>(graph_.atoms.size()); ++a) {
      Atom &atom = graph_.atoms[a];
      if (atom.implicit_h >= 0) continue;
      const int sum = graph_.bond_sum(a);
      auto v = default_valence(atom.element, 0, sum);
      if (!v)
        throw ValenceError("valence of " + std::string(element_symbol(atom.element)) +
                           " exceeded at atom " + std::to_string(a));
      if (!atom.aromatic) atom.implicit_h = *v - sum;
      else atom.implicit_h = *v - sum >= 1 ? *v - sum - 1 : 0;
    }
  }

  std::string_view text_;
  std::optional<BondOrder> pending_;
  std::size_t pos_ = 0;
  MolGraph graph_;
  std::map<int, RingBond> open_rings_;
};

}  // namespace

Molecule parse_smiles(std::string_view text) { return SmilesReader(text).read(); }

}  // namespace brs
