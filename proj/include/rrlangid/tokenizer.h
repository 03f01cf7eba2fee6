// Copyright 2026 The rrlangid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RRLANGID_TOKENIZER_H_
#define RRLANGID_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace rrlangid {

// The two views of a text that the classifier scores: lower-cased word
// tokens for rank lookup, and case-preserved characters for the character
// frequency tables.
struct TokenStream {
  std::vector<std::string> words;
  std::u32string chars;
};

// Tokenization rules, applied in order:
//
//   1. Every span from '<' to the next '>' is replaced by a space. An
//      unclosed '<' swallows the rest of the text.
//   2. The text is split on whitespace and raw tokens whose lower-cased
//      form starts with "http" are dropped.
//   3. Inside each surviving token, punctuation becomes a space, except a
//      '.' or '\'' (U+0027) with alphabetic characters on both sides.
//   4. The result is split on whitespace again.
//   5. Tokens holding a decimal digit (any script) are dropped, as are
//      tokens that now start with "http".
//   6. Words are lower-cased.
//
// `chars` holds every non-whitespace code point left after step 1.
TokenStream Tokenize(std::string_view text);

// Character classes used by the rules above. Exposed for tests.
bool IsAlphabetic(char32_t c);
bool IsDecimalDigit(char32_t c);
// Anything that is not alphabetic, numeric, whitespace, '.' or '\''.
bool IsPunctuation(char32_t c);
char32_t ToLower(char32_t c);

}  // namespace rrlangid

#endif  // RRLANGID_TOKENIZER_H_
