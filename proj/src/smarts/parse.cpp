//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cctype>
#include <map>
#include <optional>

#include "brs/molgraph/element.h"
#include "brs/smarts/pattern.h"

namespace brs {
namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }

std::string unsupported_name(char c) {
  switch (c) {
  case 'H':
    return "total hydrogen count 'H'";
  case 'D':
    return "degree 'D'";
  case 'X':
    return "connectivity 'X'";
  case 'R':
    return "ring membership 'R'";
  case 'r':
    return "ring size 'r'";
  case 'v':
    return "valence 'v'";
  case 'x':
    return "ring connectivity 'x'";
  case 'A':
    return "aliphatic wildcard 'A'";
  case 'a':
    return "aromatic wildcard 'a'";
  case '+':
  case '-':
    return "charge";
  case '$':
    return "recursive SMARTS '$(...)'";
  case '!':
    return "negation '!'";
  case '&':
    return "'&' conjunction";
  case '@':
    return "chirality or ring bond '@'";
  default:
    return std::string("'") + c + "'";
  }
}

struct OpenRing {
  int atom;
  std::optional<BondExpr> kind;
  std::size_t token;
  std::size_t offset;
};

class SmartsReader {
 public:
  SmartsReader(std::string_view text, bool require_brackets)
      : text_(text), require_brackets_(require_brackets) { }

  PatternGraph read() {
    if (text_.empty()) throw SmartsParseError("empty SMARTS", 0);
    new_component();
    std::vector<int> branches;
    int prev = -1;
    std::optional<BondExpr> pending;
    bool after_dot = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') {
        if (prev < 0 || pending) fail("unexpected '('");
        branches.push_back(prev);
        layout().push_back({LayoutToken::kOpen});
        ++pos_;
      } else if (c == ')') {
        if (branches.empty() || pending) fail("unexpected ')'");
        prev = branches.back();
        branches.pop_back();
        layout().push_back({LayoutToken::kClose});
        ++pos_;
      } else if (c == '.') {
        if (prev < 0 || pending || !branches.empty()) fail("unexpected '.'");
        if (!open_.empty()) fail("ring closure spans components");
        new_component();
        prev = -1;
        after_dot = true;
        ++pos_;
      } else if (c == '-' || c == '=' || c == '#' || c == '~') {
        if (prev < 0 || pending) fail("unexpected bond");
        pending = c == '-' ? BondExpr::kSingle
                  : c == '=' ? BondExpr::kDouble
                  : c == '#' ? BondExpr::kTriple
                             : BondExpr::kAny;
        ++pos_;
      } else if (is_digit(c) || c == '%') {
        if (prev < 0) fail("ring closure without atom");
        ring_closure(prev, pending);
        pending.reset();
      } else if (c == ':' || c == '@' || c == '!' || c == '/' || c == '\\') {
        fail("unsupported bond primitive " + unsupported_name(c));
      } else {
        const std::size_t at = pos_;
        AtomExpr expr = c == '[' ? read_bracket() : read_bare();
        const int atom = static_cast<int>(g_.atoms.size());
        g_.atoms.push_back(std::move(expr));
        g_.component_of.push_back(g_.num_components() - 1);
        g_.components.back().atoms.push_back(atom);
        if (prev >= 0) {
          g_.bonds.push_back({prev, atom, pending.value_or(BondExpr::kUnspecified)});
          layout().push_back({LayoutToken::kBond, static_cast<int>(g_.bonds.size()) - 1});
        } else if (pending) {
          throw SmartsParseError("bond without preceding atom", at);
        }
        layout().push_back({LayoutToken::kAtom, atom});
        pending.reset();
        prev = atom;
        after_dot = false;
      }
    }
    if (pending) fail("dangling bond");
    if (after_dot) fail("dangling '.'");
    if (!branches.empty()) fail("unclosed '('");
    if (!open_.empty()) throw SmartsParseError("unclosed ring", open_.begin()->second.offset);
    return std::move(g_);
  }

 private:
  [[noreturn]] void fail(const std::string &msg) const { throw SmartsParseError(msg, pos_); }

  std::vector<LayoutToken> &layout() { return g_.components.back().layout; }

  void new_component() { g_.components.emplace_back(); }

  void ring_closure(int atom, std::optional<BondExpr> kind) {
    const std::size_t at = pos_;
    int digit;
    if (text_[pos_] == '%') {
      if (pos_ + 2 >= text_.size() || !is_digit(text_[pos_ + 1]) || !is_digit(text_[pos_ + 2]))
        fail("malformed '%' ring closure");
      digit = (text_[pos_ + 1] - '0') * 10 + (text_[pos_ + 2] - '0');
      pos_ += 3;
    } else {
      digit = text_[pos_++] - '0';
    }
    auto it = open_.find(digit);
    if (it == open_.end()) {
      layout().push_back({LayoutToken::kRing, -1, digit, kind.has_value()});
      open_[digit] = {atom, kind, layout().size() - 1, at};
      return;
    }
    const OpenRing open = it->second;
    open_.erase(it);
    if (open.atom == atom || g_.find_bond(open.atom, atom) >= 0)
      throw SmartsParseError("invalid ring closure", at);
    if (open.kind && kind && *open.kind != *kind)
      throw SmartsParseError("conflicting ring closure bonds", at);
    const BondExpr k = kind ? *kind : open.kind.value_or(BondExpr::kUnspecified);
    g_.bonds.push_back({open.atom, atom, k});
    const int b = static_cast<int>(g_.bonds.size()) - 1;
    layout()[open.token].index = b;
    layout().push_back({LayoutToken::kRing, b, digit, kind.has_value()});
  }

  AtomExpr read_bare() {
    if (require_brackets_) fail("atoms must be written in brackets");
    AtomExpr e;
    e.bracketed = false;
    const char c = text_[pos_];
    if (c == '*') {
      e.or_terms.push_back({PrimitiveKind::kWildcard, 0});
      ++pos_;
      return e;
    }
    std::string_view rest = text_.substr(pos_);
    if (rest.starts_with("Cl") || rest.starts_with("Br")) {
      e.or_terms.push_back({PrimitiveKind::kAliphatic, atomic_number(rest.substr(0, 2))});
      pos_ += 2;
      return e;
    }
    if (is_upper(c) || is_lower(c)) {
      const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      const int z = atomic_number(std::string_view(&up, 1));
      if (z != 0 && is_organic_subset(z) && (is_upper(c) || can_be_aromatic(z))) {
        e.or_terms.push_back({is_upper(c) ? PrimitiveKind::kAliphatic : PrimitiveKind::kAromatic, z});
        ++pos_;
        return e;
      }
    }
    fail("unsupported primitive " + unsupported_name(c));
  }

  int read_int() {
    if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("expected number");
    int v = 0;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 100000) fail("number too large");
    }
    return v;
  }

  Primitive read_primitive() {
    if (pos_ >= text_.size()) fail("unterminated atom expression");
    const char c = text_[pos_];
    std::string_view rest = text_.substr(pos_);
    if (c == '#') {
      ++pos_;
      const int z = read_int();
      if (z < 1 || z > 118) fail("atomic number out of range");
      return {PrimitiveKind::kAtomicNumber, z};
    }
    if (c == '*') {
      ++pos_;
      return {PrimitiveKind::kWildcard, 0};
    }
    if (c == 'h') {
      ++pos_;
      if (pos_ < text_.size() && is_digit(text_[pos_])) return {PrimitiveKind::kHydrogen, read_int()};
      return {PrimitiveKind::kHydrogen, -1};
    }
    if (rest.starts_with("se") || rest.starts_with("as")) {
      pos_ += 2;
      return {PrimitiveKind::kAromatic, c == 's' ? 34 : 33};
    }
    if (is_lower(c)) {
      const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      const int z = atomic_number(std::string_view(&up, 1));
      if (z == 0 || !can_be_aromatic(z)) fail("unsupported primitive " + unsupported_name(c));
      ++pos_;
      return {PrimitiveKind::kAromatic, z};
    }
    if (is_upper(c)) {
      if (rest.size() > 1 && is_lower(rest[1])) {
        const int z2 = atomic_number(rest.substr(0, 2));
        if (z2 != 0) {
          pos_ += 2;
          return {PrimitiveKind::kAliphatic, z2};
        }
      }
      const int z = c == 'H' ? 0 : atomic_number(rest.substr(0, 1));
      if (z == 0) fail("unsupported primitive " + unsupported_name(c));
      ++pos_;
      return {PrimitiveKind::kAliphatic, z};
    }
    fail("unsupported primitive " + unsupported_name(c));
  }

  AtomExpr read_bracket() {
    ++pos_;
    AtomExpr e;
    e.or_terms.push_back(read_primitive());
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      e.or_terms.push_back(read_primitive());
    }
    while (pos_ < text_.size() && text_[pos_] == ';') {
      ++pos_;
      e.and_terms.push_back(read_primitive());
    }
    if (pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      e.map = read_int();
      if (e.map == 0) fail("atom map must be positive");
    }
    if (pos_ >= text_.size()) fail("unterminated atom expression");
    if (text_[pos_] != ']') fail("unsupported primitive " + unsupported_name(text_[pos_]));
    ++pos_;
    return e;
  }

  std::string_view text_;
  bool require_brackets_;
  std::size_t pos_ = 0;
  PatternGraph g_;
  std::map<int, OpenRing> open_;
};

}  // namespace

PatternGraph parse_smarts(std::string_view text, bool require_brackets) {
  return SmartsReader(text, require_brackets).read();
}

}  // namespace brs
