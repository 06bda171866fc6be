#include "raag/words.hpp"

#include <cctype>

namespace raag {

namespace {

Word parse_impl(const DefiningGraph& g, std::string_view text,
                bool allow_tau_inv) {
  Word word;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    if (j == i) {
      break;
    }
    std::string_view token = text.substr(i, j - i);
    i = j;

    if (token == "1") {
      continue;  // the empty word contributes nothing anywhere
    }
    TokenKind kind;
    switch (token.front()) {
      case '+':
        kind = TokenKind::sigma;
        break;
      case '-':
        kind = TokenKind::sigma_inv;
        break;
      case '~':
        kind = TokenKind::tau;
        break;
      case '!':
        if (!allow_tau_inv) {
          throw ParseError("token '" + std::string(token) +
                           "': '!' is only valid in extended words");
        }
        kind = TokenKind::tau_inv;
        break;
      default:
        throw ParseError("bad token '" + std::string(token) + "'");
    }
    word.push_back({kind, g.require(token.substr(1))});
  }
  return word;
}

}  // namespace

Word parse_word(const DefiningGraph& g, std::string_view text) {
  return parse_impl(g, text, false);
}

Word parse_extended_word(const DefiningGraph& g, std::string_view text) {
  return parse_impl(g, text, true);
}

std::string to_text(const DefiningGraph& g, const Word& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    switch (w[i].kind) {
      case TokenKind::sigma:
        out += '+';
        break;
      case TokenKind::sigma_inv:
        out += '-';
        break;
      case TokenKind::tau:
        out += '~';
        break;
      case TokenKind::tau_inv:
        out += '!';
        break;
    }
    out += g.name(w[i].vertex);
  }
  return out;
}

}  // namespace raag
