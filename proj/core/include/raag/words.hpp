// Token grammar for words over a defining graph: whitespace-separated
// tokens `+v` (generator), `-v` (inverse generator), `~v` (singular
// generator), and the literal `1` for the empty word.  Extended words also
// admit `!v`, the formal inverse of `~v`, which only exists in the
// enveloping group.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "raag/defining_graph.hpp"

namespace raag {

enum class TokenKind { sigma, sigma_inv, tau, tau_inv };

struct Token {
  TokenKind kind;
  Vertex vertex;

  bool operator==(const Token&) const = default;
};

using Word = std::vector<Token>;

/// Parses a word; rejects `!v`.  Throws ParseError on unknown vertices or
/// bad tokens.
Word parse_word(const DefiningGraph& g, std::string_view text);

/// Parses an extended word (allows `!v`).
Word parse_extended_word(const DefiningGraph& g, std::string_view text);

std::string to_text(const DefiningGraph& g, const Word& w);

}  // namespace raag
