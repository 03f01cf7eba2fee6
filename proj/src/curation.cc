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

#include "rrlangid/curation.h"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "rrlangid/classifier.h"
#include "rrlangid/tokenizer.h"

namespace rrlangid {
namespace {

bool SurvivesCharCutoff(const std::string& word, size_t language,
                        const ClassifierModel& model) {
  const std::vector<double> scores = CharScores(Tokenize(word).chars, model);
  const std::vector<size_t> survivors =
      Survivors(scores, model.params().char_cutoff_ratio);
  return std::find(survivors.begin(), survivors.end(), language) !=
         survivors.end();
}

}  // namespace

std::vector<CandidateWord> Harvest(std::span<const std::string> texts,
                                   const ClassifierModel& model, size_t top_n) {
  const std::vector<Prediction> predictions = ClassifyBatch(texts, model);

  std::map<size_t, std::unordered_map<std::string, uint64_t>> counts;
  for (size_t i = 0; i < texts.size(); ++i) {
    const Winner* w = predictions[i].winner();
    if (w == nullptr) continue;
    auto& language_counts = counts[*model.IndexOf(w->language)];
    for (const std::string& word : Tokenize(texts[i]).words) {
      ++language_counts[word];
    }
  }

  std::vector<CandidateWord> candidates;
  for (const auto& [index, word_counts] : counts) {
    const std::string& language = model.languages()[index];
    std::vector<std::pair<std::string, uint64_t>> ranked(word_counts.begin(),
                                                         word_counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    const RankTable& table = model.profile(index).words;
    const size_t limit = std::min(top_n, ranked.size());
    for (size_t r = 0; r < limit; ++r) {
      const std::string& word = ranked[r].first;
      if (table.Contains(word)) continue;
      if (!SurvivesCharCutoff(word, index, model)) continue;
      candidates.push_back({language, word, r + 1, std::nullopt});
    }
  }
  return candidates;
}

OverridesSet ToOverrides(std::span<const CandidateWord> candidates) {
  std::vector<CandidateWord> sorted(candidates.begin(), candidates.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CandidateWord& a, const CandidateWord& b) {
                     if (a.language != b.language) {
                       return a.language < b.language;
                     }
                     return a.conversational_rank < b.conversational_rank;
                   });
  OverridesSet overrides;
  for (const CandidateWord& c : sorted) {
    overrides.Insert(c.language, c.word, c.conversational_rank);
  }
  return overrides;
}

}  // namespace rrlangid
