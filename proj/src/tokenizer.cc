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

#include "rrlangid/tokenizer.h"

#include <unicode/uchar.h>

#include "rrlangid/utf8.h"

namespace rrlangid {
namespace {

constexpr char32_t kApostrophe = U'\'';
constexpr char32_t kPeriod = U'.';

// Replaces each '<'...'>' span with a single space.
std::u32string StripAngleSpans(const std::u32string& text) {
  std::u32string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != U'<') {
      out.push_back(text[i]);
      continue;
    }
    const size_t close = text.find(U'>', i + 1);
    out.push_back(U' ');
    if (close == std::u32string::npos) break;
    i = close;
  }
  return out;
}

std::u32string Lowered(std::u32string_view token) {
  std::u32string out(token);
  for (char32_t& c : out) c = ToLower(c);
  return out;
}

bool StartsWithHttp(std::u32string_view token) {
  return Lowered(token.substr(0, 4)) == U"http";
}

bool HasDecimalDigit(std::u32string_view token) {
  for (char32_t c : token) {
    if (IsDecimalDigit(c)) return true;
  }
  return false;
}

std::vector<std::u32string_view> SplitWhitespace32(std::u32string_view text) {
  std::vector<std::u32string_view> pieces;
  size_t start = std::u32string_view::npos;
  for (size_t i = 0; i < text.size(); ++i) {
    const bool space = IsWhitespace(text[i]);
    if (space && start != std::u32string_view::npos) {
      pieces.push_back(text.substr(start, i - start));
      start = std::u32string_view::npos;
    } else if (!space && start == std::u32string_view::npos) {
      start = i;
    }
  }
  if (start != std::u32string_view::npos) pieces.push_back(text.substr(start));
  return pieces;
}

// Step 3: punctuation to spaces, keeping alphabetic-flanked '.' and '\''.
std::u32string BlankPunctuation(std::u32string_view token) {
  std::u32string out(token);
  for (size_t i = 0; i < token.size(); ++i) {
    const char32_t c = token[i];
    if (!IsPunctuation(c) && c != kPeriod && c != kApostrophe) continue;
    if (c == kPeriod || c == kApostrophe) {
      const bool flanked = i > 0 && i + 1 < token.size() &&
                           IsAlphabetic(token[i - 1]) &&
                           IsAlphabetic(token[i + 1]);
      if (flanked) continue;
    }
    out[i] = U' ';
  }
  return out;
}

}  // namespace

bool IsAlphabetic(char32_t c) {
  const auto cp = static_cast<UChar32>(c);
  // Combining marks count as letters so that scripts such as Devanagari
  // and Thai keep their words intact.
  return u_hasBinaryProperty(cp, UCHAR_ALPHABETIC) ||
         (U_GET_GC_MASK(cp) & U_GC_M_MASK) != 0;
}

bool IsDecimalDigit(char32_t c) {
  return u_charType(static_cast<UChar32>(c)) == U_DECIMAL_DIGIT_NUMBER;
}

bool IsPunctuation(char32_t c) {
  if (c == kApostrophe || c == kPeriod) return false;
  const auto cp = static_cast<UChar32>(c);
  return !IsAlphabetic(c) && (U_GET_GC_MASK(cp) & U_GC_N_MASK) == 0 &&
         !u_isUWhiteSpace(cp);
}

char32_t ToLower(char32_t c) {
  return static_cast<char32_t>(u_tolower(static_cast<UChar32>(c)));
}

TokenStream Tokenize(std::string_view text) {
  TokenStream result;
  const std::u32string stripped = StripAngleSpans(DecodeUtf8(text));

  result.chars.reserve(stripped.size());
  for (char32_t c : stripped) {
    if (!IsWhitespace(c)) result.chars.push_back(c);
  }

  for (std::u32string_view raw : SplitWhitespace32(stripped)) {
    if (StartsWithHttp(raw)) continue;
    const std::u32string blanked = BlankPunctuation(raw);
    for (std::u32string_view piece : SplitWhitespace32(blanked)) {
      if (HasDecimalDigit(piece) || StartsWithHttp(piece)) continue;
      result.words.push_back(EncodeUtf8(Lowered(piece)));
    }
  }
  return result;
}

}  // namespace rrlangid
