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

#ifndef RRLANGID_TRAINER_H_
#define RRLANGID_TRAINER_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rrlangid/model.h"

namespace rrlangid {

struct CorpusSpec {
  // Language code -> plain-text training files.
  std::map<std::string, std::vector<std::filesystem::path>> files;
  size_t capacity = kDefaultCapacity;
};

// Word and character counts for one language. Words come from the
// tokenizer's lower-cased word stream, characters from its case-preserved
// character stream.
struct LanguageCounts {
  std::unordered_map<std::string, uint64_t> words;
  std::map<char32_t, uint64_t> chars;
  uint64_t num_words = 0;
  uint64_t num_chars = 0;

  void Add(std::string_view text);
  void Merge(const LanguageCounts& other);

  bool operator==(const LanguageCounts&) const = default;
};

using CorpusCounts = std::map<std::string, LanguageCounts>;

// Counts every file of every language. Files are processed in parallel with
// OpenMP; the merge runs in file order so the result does not depend on the
// schedule. Throws DataError for an unreadable file or a language with no
// files.
CorpusCounts CountCorpus(const CorpusSpec& spec);
// Single-threaded reference for CountCorpus.
CorpusCounts CountCorpusSerial(const CorpusSpec& spec);

// Top `capacity` words by descending count, ties in ascending byte order.
RankTable RankWords(const std::string& language,
                    const std::unordered_map<std::string, uint64_t>& counts,
                    size_t capacity);

// Throws DataError for a language without any characters.
ClassifierModel BuildModel(const CorpusCounts& counts, size_t capacity);

ClassifierModel Train(const CorpusSpec& spec);

}  // namespace rrlangid

#endif  // RRLANGID_TRAINER_H_
