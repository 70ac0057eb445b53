//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "brs/encode/encode.h"

#include <stdexcept>

namespace brs {
namespace {

void append_text(TokenSequence &t, std::string_view s, const Vocab &v, std::int32_t type, std::size_t *unknown) {
  for (char c : s) {
    const int id = v.id_of(c);
    if (id == kUnkId && unknown != nullptr) ++*unknown;
    t.ids.push_back(id);
    t.type_ids.push_back(type);
  }
}

void append_special(TokenSequence &t, int id) {
  t.ids.push_back(id);
  t.type_ids.push_back(kTypeSpecial);
}

}  // namespace

TokenSequence encode_input(const std::vector<std::string> &reactants, const std::optional<std::string> &template_smarts,
                           const Vocab &v, InputMode mode, std::size_t *unknown) {
  if (reactants.empty()) throw std::invalid_argument("no reactants to encode");
  if (mode == InputMode::kTemplateBased && !template_smarts)
    throw std::invalid_argument("template-based input needs a template");
  if (mode == InputMode::kTemplateFree && template_smarts)
    throw std::invalid_argument("template-free input must not carry a template");
  TokenSequence t;
  for (std::size_t i = 0; i < reactants.size(); ++i) {
    if (i > 0) append_special(t, kSepId);
    append_text(t, reactants[i], v, kTypeReactant, unknown);
  }
  if (template_smarts) {
    append_special(t, kSepId);
    append_text(t, *template_smarts, v, kTypeReaction, unknown);
  }
  return t;
}

TokenSequence encode_target(std::string_view product, const Vocab &v, std::size_t *unknown) {
  if (product.empty()) throw std::invalid_argument("empty product");
  TokenSequence t;
  append_special(t, kBosId);
  append_text(t, product, v, kTypeProduct, unknown);
  append_special(t, kEosId);
  return t;
}

std::string decode(const TokenSequence &t, const Vocab &v, std::string_view separator) {
  std::string out;
  for (std::int32_t id : t.ids) {
    const std::string &tok = v.token(id);
    if (id == kSepId) out += separator;
    else if (id >= kNumSpecials) out += tok;
  }
  return out;
}

void pad_to(TokenSequence &t, std::size_t length) {
  t.ids.resize(length, kPadId);
  t.type_ids.resize(length, kTypePad);
}

}  // namespace brs
