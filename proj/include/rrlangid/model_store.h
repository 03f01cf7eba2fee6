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

#ifndef RRLANGID_MODEL_STORE_H_
#define RRLANGID_MODEL_STORE_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rrlangid/model.h"

namespace rrlangid {

// On-disk layout of a model directory, one pair of files per language LL:
//
//   LL_words   word<TAB>count, one per line; line number is the rank.
//   LL_chars   char<TAB>count, one per line.
//
// Both files are written sorted by descending count with ties in ascending
// byte order. Files that do not end in _words or _chars are ignored.

// Throws DataError naming the language, or the file and line, on any
// problem. Word files are truncated to `capacity` ranks.
ClassifierModel LoadModel(const std::filesystem::path& dir,
                          size_t capacity = kDefaultCapacity,
                          const ScoringParams& params = {});

// Creates `dir` if needed. Throws DataError on I/O failure.
void SaveModel(const ClassifierModel& model, const std::filesystem::path& dir);

// Serialized forms of a single table, as stored in LL_words / LL_chars.
std::string SerializeRankTable(const RankTable& table);
std::string SerializeCharTable(const CharFreqTable& table);

struct OverrideOp {
  enum class Kind { kInsert, kDelete };

  Kind kind = Kind::kInsert;
  std::string language;
  std::string word;
  size_t rank = 0;  // kInsert only

  bool operator==(const OverrideOp&) const = default;
};

// Ordered rank-table edits. Text form (overrides.tsv), applied top to bottom:
//
//   LL<TAB>+<TAB>word<TAB>rank
//   LL<TAB>-<TAB>word
struct OverridesSet {
  std::vector<OverrideOp> ops;

  void Insert(std::string language, std::string word, size_t rank);
  void Delete(std::string language, std::string word);
  bool empty() const { return ops.empty(); }

  bool operator==(const OverridesSet&) const = default;
};

// Empty lines and lines starting with '#' are skipped.
OverridesSet ParseOverrides(std::istream& in, const std::string& source_name);
OverridesSet ReadOverrides(const std::filesystem::path& path);
std::string FormatOverrides(const OverridesSet& overrides);
void WriteOverrides(const OverridesSet& overrides,
                    const std::filesystem::path& path);

// Returns a new model with every edit applied in order. Throws DataError for
// an unknown language, a rank below 1 or an invalid word.
ClassifierModel ApplyOverrides(const ClassifierModel& model,
                               const OverridesSet& overrides);

}  // namespace rrlangid

#endif  // RRLANGID_MODEL_STORE_H_
