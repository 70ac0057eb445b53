//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_ENCODE_ENCODE_H_
#define BRS_ENCODE_ENCODE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brs/encode/vocab.h"

namespace brs {

enum TypeId : std::int32_t {
  kTypePad = 0,
  kTypeReactant = 1,
  kTypeReaction = 2,
  kTypeProduct = 3,
  kTypeSpecial = 4,
};

enum class InputMode {
  kTemplateBased,  // reactants, then the template
  kTemplateFree,   // reactants only
};

struct TokenSequence {
  std::vector<std::int32_t> ids;
  std::vector<std::int32_t> type_ids;

  std::size_t size() const { return ids.size(); }
  bool operator==(const TokenSequence &) const = default;
};

// r1 SEP r2 ... [SEP template]. Unknown characters become UNK and are
// counted in *unknown. Throws std::invalid_argument for an empty reactant
// list or a template/mode mismatch.
TokenSequence encode_input(const std::vector<std::string> &reactants, const std::optional<std::string> &template_smarts,
                           const Vocab &v, InputMode mode, std::size_t *unknown = nullptr);

// BOS product EOS. Throws std::invalid_argument for an empty product.
TokenSequence encode_target(std::string_view product, const Vocab &v, std::size_t *unknown = nullptr);

// Characters concatenated; SEP becomes `separator`, other specials are
// dropped. Throws std::out_of_range for ids outside the vocab.
std::string decode(const TokenSequence &t, const Vocab &v, std::string_view separator = " ");

// Pads or truncates in place to `length`.
void pad_to(TokenSequence &t, std::size_t length);

}  // namespace brs

#endif  // BRS_ENCODE_ENCODE_H_
