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

#ifndef CFGKB_SRC_LANG_LEXER_HPP_
#define CFGKB_SRC_LANG_LEXER_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cfgkb/error.hpp"

namespace cfgkb::lang {

enum class Tok {
  kIdent,
  kInt,
  kLBrace, kRBrace, kLParen, kRParen, kLBracket, kRBracket,
  kComma, kSemi, kDot, kDotDot, kColon, kBar, kAmp, kTilde,
  kEq, kNe, kLt, kLe, kGt, kGe,
  kImplies, kEquiv, kArrow,
  kPlus, kMinus, kStar, kBang, kQuestion, kHash,
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::int64_t value = 0;
  SourceLoc loc;
};

std::vector<Token> Tokenize(std::string_view text);
const char* TokName(Tok t);

}  // namespace cfgkb::lang

#endif  // CFGKB_SRC_LANG_LEXER_HPP_
