// Copyright 2026 The cfgkb Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexer.hpp"

#include <cctype>

namespace cfgkb::lang {

const char* TokName(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kInt: return "integer";
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kComma: return "','";
    case Tok::kSemi: return "';'";
    case Tok::kDot: return "'.'";
    case Tok::kDotDot: return "'..'";
    case Tok::kColon: return "':'";
    case Tok::kBar: return "'|'";
    case Tok::kAmp: return "'&'";
    case Tok::kTilde: return "'~'";
    case Tok::kEq: return "'='";
    case Tok::kNe: return "'~='";
    case Tok::kLt: return "'<'";
    case Tok::kLe: return "'=<'";
    case Tok::kGt: return "'>'";
    case Tok::kGe: return "'>='";
    case Tok::kImplies: return "'=>'";
    case Tok::kEquiv: return "'<=>'";
    case Tok::kArrow: return "'->'";
    case Tok::kPlus: return "'+'";
    case Tok::kMinus: return "'-'";
    case Tok::kStar: return "'*'";
    case Tok::kBang: return "'!'";
    case Tok::kQuestion: return "'?'";
    case Tok::kHash: return "'#'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };

  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (starts("//")) {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (starts("/*")) {
      SourceLoc open{line, col};
      advance(2);
      while (i < text.size() && !starts("*/")) advance(1);
      if (i >= text.size()) throw Error(ErrorKind::kSyntax, {{open, "unterminated comment"}});
      advance(2);
      continue;
    }
    Token tok;
    tok.loc = {line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\'')) {
        ++j;
      }
      tok.kind = Tok::kIdent;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(tok));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tok.kind = Tok::kInt;
      tok.text = std::string(text.substr(i, j - i));
      try {
        tok.value = std::stoll(tok.text);
      } catch (const std::exception&) {
        throw Error(ErrorKind::kSyntax, {{tok.loc, "integer literal out of range"}});
      }
      advance(j - i);
      out.push_back(std::move(tok));
      continue;
    }
    struct Punct {
      std::string_view text;
      Tok kind;
    };
    // Longest match first.
    static constexpr Punct kPuncts[] = {
        {"<=>", Tok::kEquiv}, {"=>", Tok::kImplies}, {"=<", Tok::kLe}, {">=", Tok::kGe},
        {"~=", Tok::kNe},     {"->", Tok::kArrow},   {"..", Tok::kDotDot}, {"{", Tok::kLBrace},
        {"}", Tok::kRBrace},  {"(", Tok::kLParen},   {")", Tok::kRParen}, {"[", Tok::kLBracket},
        {"]", Tok::kRBracket}, {",", Tok::kComma},   {";", Tok::kSemi},   {".", Tok::kDot},
        {":", Tok::kColon},   {"|", Tok::kBar},      {"&", Tok::kAmp},    {"~", Tok::kTilde},
        {"=", Tok::kEq},      {"<", Tok::kLt},       {">", Tok::kGt},     {"+", Tok::kPlus},
        {"-", Tok::kMinus},   {"*", Tok::kStar},     {"!", Tok::kBang},   {"?", Tok::kQuestion},
        {"#", Tok::kHash},
    };
    bool matched = false;
    for (const Punct& p : kPuncts) {
      if (starts(p.text)) {
        tok.kind = p.kind;
        tok.text = std::string(p.text);
        advance(p.text.size());
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw Error(ErrorKind::kSyntax,
                  {{tok.loc, std::string("unexpected character '") + c + "'"}});
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = Tok::kEnd;
  end.loc = {line, col};
  out.push_back(end);
  return out;
}

}  // namespace cfgkb::lang
