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

#ifndef RRLANGID_MODEL_H_
#define RRLANGID_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rrlangid {

inline constexpr size_t kDefaultCapacity = 5000;
inline constexpr double kDefaultPresenceWeight = 0.05;
inline constexpr double kDefaultDamping = 10.0;
inline constexpr double kDefaultCharCutoffRatio = 0.75;

// Raised for malformed models, unreadable inputs and invalid edits.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two lower-case ASCII letters.
bool IsValidLanguageCode(std::string_view code);

// A rank-table entry is non-empty, already lower-cased, free of whitespace
// and decimal digits, and does not start with "http".
bool IsValidRankEntry(std::string_view word);

struct RankedWord {
  std::string word;
  uint64_t count = 0;

  bool operator==(const RankedWord&) const = default;
};

// Ordered word list for one language. The 1-based position of a word is its
// rank. Entries beyond `capacity` are dropped on construction.
class RankTable {
 public:
  RankTable() = default;
  // Throws DataError on an invalid code, an invalid entry or a duplicate.
  RankTable(std::string language, std::vector<RankedWord> entries,
            size_t capacity = kDefaultCapacity);

  const std::string& language() const { return language_; }
  size_t capacity() const { return capacity_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<RankedWord>& entries() const { return entries_; }

  // 1-based rank, or nullopt when the word is not in the table.
  std::optional<size_t> Rank(const std::string& word) const;
  bool Contains(const std::string& word) const { return index_.count(word); }

  // Moves or inserts `word` so that it sits at `rank`; later entries shift
  // one place down and the table is cut back to capacity. A rank past the
  // end appends. An inserted word takes over the count of the entry it
  // displaces so that the stored counts stay non-increasing.
  RankTable WithInsertion(const std::string& word, size_t rank) const;
  // Removes `word` if present and closes the gap.
  RankTable WithDeletion(const std::string& word) const;

  bool operator==(const RankTable& other) const {
    return language_ == other.language_ && capacity_ == other.capacity_ &&
           entries_ == other.entries_;
  }

 private:
  std::string language_;
  size_t capacity_ = kDefaultCapacity;
  std::vector<RankedWord> entries_;
  std::unordered_map<std::string, size_t> index_;
};

// Relative character frequencies for one language, kept alongside the raw
// counts they were normalized from.
class CharFreqTable {
 public:
  CharFreqTable() = default;
  // Throws DataError when `counts` is empty, holds a zero count, or has a
  // whitespace or non-scalar code point.
  CharFreqTable(std::string language, std::map<char32_t, uint64_t> counts);

  const std::string& language() const { return language_; }
  const std::map<char32_t, uint64_t>& counts() const { return counts_; }
  uint64_t total() const { return total_; }
  // Relative frequency, 0 for characters never seen.
  double Frequency(char32_t c) const;

  bool operator==(const CharFreqTable& other) const {
    return language_ == other.language_ && counts_ == other.counts_;
  }

 private:
  std::string language_;
  std::map<char32_t, uint64_t> counts_;
  std::unordered_map<char32_t, double> freqs_;
  uint64_t total_ = 0;
};

struct ScoringParams {
  double presence_weight = kDefaultPresenceWeight;
  double damping = kDefaultDamping;
  double char_cutoff_ratio = kDefaultCharCutoffRatio;

  // Throws std::invalid_argument unless P >= 0, D > 0 and the cutoff ratio
  // lies in (0, 1].
  void Validate() const;
};

struct LanguageProfile {
  RankTable words;
  CharFreqTable chars;
};

// Immutable set of per-language tables plus scoring constants. Languages are
// held in ascending code order; per-language score vectors produced by the
// classifier use the same order.
class ClassifierModel {
 public:
  // A model with no languages. Every classification abstains.
  ClassifierModel() = default;
  ClassifierModel(std::vector<LanguageProfile> profiles,
                  ScoringParams params = {});

  const std::vector<std::string>& languages() const { return languages_; }
  size_t num_languages() const { return profiles_.size(); }
  const LanguageProfile& profile(size_t i) const { return profiles_[i]; }
  const std::vector<LanguageProfile>& profiles() const { return profiles_; }
  // Index into languages(), or nullopt.
  std::optional<size_t> IndexOf(std::string_view language) const;
  const ScoringParams& params() const { return params_; }

  ClassifierModel WithParams(const ScoringParams& params) const;

  // P(language | c) under a uniform language prior, one entry per language;
  // nullptr when no language has seen `c`.
  const std::vector<double>* CharPosteriors(char32_t c) const;

 private:
  std::vector<std::string> languages_;
  std::vector<LanguageProfile> profiles_;
  ScoringParams params_;
  std::unordered_map<char32_t, std::vector<double>> posteriors_;
};

}  // namespace rrlangid

#endif  // RRLANGID_MODEL_H_
