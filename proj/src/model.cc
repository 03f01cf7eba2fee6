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

#include "rrlangid/model.h"

#include <algorithm>
#include <set>

#include "rrlangid/tokenizer.h"
#include "rrlangid/utf8.h"

namespace rrlangid {

bool IsValidLanguageCode(std::string_view code) {
  return code.size() == 2 && std::all_of(code.begin(), code.end(), [](char c) {
           return c >= 'a' && c <= 'z';
         });
}

bool IsValidRankEntry(std::string_view word) {
  if (word.empty()) return false;
  const std::u32string chars = DecodeUtf8(word);
  for (char32_t c : chars) {
    if (IsWhitespace(c) || IsDecimalDigit(c) || ToLower(c) != c) return false;
  }
  return chars.substr(0, 4) != U"http";
}

RankTable::RankTable(std::string language, std::vector<RankedWord> entries,
                     size_t capacity)
    : language_(std::move(language)),
      capacity_(capacity),
      entries_(std::move(entries)) {
  if (!IsValidLanguageCode(language_)) {
    throw DataError("invalid language code '" + language_ + "'");
  }
  if (entries_.size() > capacity_) entries_.resize(capacity_);
  index_.reserve(entries_.size());
  for (size_t i = 0; i < entries_.size(); ++i) {
    const std::string& word = entries_[i].word;
    if (!IsValidRankEntry(word)) {
      throw DataError(language_ + ": invalid rank entry '" + word + "'");
    }
    if (!index_.emplace(word, i + 1).second) {
      throw DataError(language_ + ": duplicate rank entry '" + word + "'");
    }
  }
}

std::optional<size_t> RankTable::Rank(const std::string& word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RankTable RankTable::WithInsertion(const std::string& word, size_t rank) const {
  if (rank < 1) {
    throw DataError(language_ + ": override rank must be at least 1");
  }
  if (!IsValidRankEntry(word)) {
    throw DataError(language_ + ": invalid override word '" + word + "'");
  }
  std::vector<RankedWord> entries;
  entries.reserve(entries_.size() + 1);
  for (const RankedWord& e : entries_) {
    if (e.word != word) entries.push_back(e);
  }
  const size_t at = std::min(rank - 1, entries.size());
  uint64_t count = 1;
  if (at < entries.size()) {
    count = entries[at].count;
  } else if (!entries.empty()) {
    count = entries.back().count;
  }
  entries.insert(entries.begin() + static_cast<std::ptrdiff_t>(at),
                 RankedWord{word, count});
  return RankTable(language_, std::move(entries), capacity_);
}

RankTable RankTable::WithDeletion(const std::string& word) const {
  std::vector<RankedWord> entries;
  entries.reserve(entries_.size());
  for (const RankedWord& e : entries_) {
    if (e.word != word) entries.push_back(e);
  }
  return RankTable(language_, std::move(entries), capacity_);
}

CharFreqTable::CharFreqTable(std::string language,
                             std::map<char32_t, uint64_t> counts)
    : language_(std::move(language)), counts_(std::move(counts)) {
  if (!IsValidLanguageCode(language_)) {
    throw DataError("invalid language code '" + language_ + "'");
  }
  if (counts_.empty()) {
    throw DataError(language_ + ": character table is empty");
  }
  for (const auto& [c, n] : counts_) {
    if (n == 0) throw DataError(language_ + ": zero character count");
    if (c > 0x10FFFF || (c >= 0xD800 && c <= 0xDFFF) || IsWhitespace(c)) {
      throw DataError(language_ +
                      ": whitespace or invalid code point in "
                      "character table");
    }
    total_ += n;
  }
  freqs_.reserve(counts_.size());
  for (const auto& [c, n] : counts_) {
    freqs_.emplace(c, static_cast<double>(n) / static_cast<double>(total_));
  }
}

double CharFreqTable::Frequency(char32_t c) const {
  auto it = freqs_.find(c);
  return it == freqs_.end() ? 0.0 : it->second;
}

void ScoringParams::Validate() const {
  if (!(presence_weight >= 0.0)) {
    throw std::invalid_argument("presence weight must be >= 0");
  }
  if (!(damping > 0.0)) throw std::invalid_argument("damping must be > 0");
  if (!(char_cutoff_ratio > 0.0 && char_cutoff_ratio <= 1.0)) {
    throw std::invalid_argument("character cutoff ratio must be in (0, 1]");
  }
}

ClassifierModel::ClassifierModel(std::vector<LanguageProfile> profiles,
                                 ScoringParams params)
    : profiles_(std::move(profiles)), params_(params) {
  params_.Validate();
  std::sort(profiles_.begin(), profiles_.end(),
            [](const LanguageProfile& a, const LanguageProfile& b) {
              return a.words.language() < b.words.language();
            });
  for (const LanguageProfile& p : profiles_) {
    const std::string& code = p.words.language();
    if (p.chars.language() != code) {
      throw DataError("language '" + code +
                      "' has mismatched word and character tables");
    }
    if (!languages_.empty() && languages_.back() == code) {
      throw DataError("language '" + code + "' appears twice");
    }
    languages_.push_back(code);
  }

  std::set<char32_t> alphabet;
  for (const LanguageProfile& p : profiles_) {
    for (const auto& [c, n] : p.chars.counts()) alphabet.insert(c);
  }
  posteriors_.reserve(alphabet.size());
  for (char32_t c : alphabet) {
    double denom = 0.0;
    for (const LanguageProfile& p : profiles_) denom += p.chars.Frequency(c);
    std::vector<double> posterior;
    posterior.reserve(profiles_.size());
    for (const LanguageProfile& p : profiles_) {
      posterior.push_back(p.chars.Frequency(c) / denom);
    }
    posteriors_.emplace(c, std::move(posterior));
  }
}

std::optional<size_t> ClassifierModel::IndexOf(
    std::string_view language) const {
  auto it = std::lower_bound(languages_.begin(), languages_.end(), language);
  if (it == languages_.end() || *it != language) return std::nullopt;
  return static_cast<size_t>(it - languages_.begin());
}

ClassifierModel ClassifierModel::WithParams(const ScoringParams& params) const {
  params.Validate();
  ClassifierModel copy = *this;
  copy.params_ = params;
  return copy;
}

const std::vector<double>* ClassifierModel::CharPosteriors(char32_t c) const {
  auto it = posteriors_.find(c);
  return it == posteriors_.end() ? nullptr : &it->second;
}

}  // namespace rrlangid
