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

#ifndef RRLANGID_UTF8_H_
#define RRLANGID_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rrlangid {

// Decodes UTF-8. Ill-formed sequences decode to U+FFFD.
std::u32string DecodeUtf8(std::string_view text);

std::string EncodeUtf8(std::u32string_view text);
void AppendUtf8(char32_t c, std::string* out);

// Number of code points in `text`.
size_t CodePointLength(std::string_view text);

// Unicode White_Space property.
bool IsWhitespace(char32_t c);

// Splits on runs of Unicode whitespace; never yields empty pieces.
std::vector<std::string_view> SplitWhitespace(std::string_view text);

}  // namespace rrlangid

#endif  // RRLANGID_UTF8_H_
