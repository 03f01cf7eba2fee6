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

#include "rrlangid/classifier.h"

#include <algorithm>
#include <cmath>

#include "rrlangid/tokenizer.h"

namespace rrlangid {

const char* AbstainReasonName(AbstainReason reason) {
  switch (reason) {
    case AbstainReason::kEmptyInput:
      return "empty-input";
    case AbstainReason::kNoCharEvidence:
      return "no-char-evidence";
    case AbstainReason::kNoWordEvidence:
      return "no-word-evidence";
  }
  return "unknown";
}

double WordScore(std::span<const std::string> tokens, const RankTable& table,
                 double presence_weight, double damping) {
  double score = 0.0;
  for (const std::string& token : tokens) {
    const std::optional<size_t> rank = table.Rank(token);
    if (!rank) continue;
    score +=
        presence_weight + 1.0 / std::sqrt(damping + static_cast<double>(*rank));
  }
  return score;
}

std::vector<double> CharScores(std::u32string_view chars,
                               const ClassifierModel& model) {
  std::vector<double> scores(model.num_languages(), 0.0);
  for (char32_t c : chars) {
    const std::vector<double>* posterior = model.CharPosteriors(c);
    if (posterior == nullptr) continue;
    for (size_t i = 0; i < scores.size(); ++i) scores[i] += (*posterior)[i];
  }
  return scores;
}

std::vector<size_t> Survivors(std::span<const double> char_scores,
                              double cutoff_ratio) {
  std::vector<size_t> survivors;
  if (char_scores.empty()) return survivors;
  const double best = *std::max_element(char_scores.begin(), char_scores.end());
  if (!(best > 0.0)) return survivors;
  const double threshold = cutoff_ratio * best;
  for (size_t i = 0; i < char_scores.size(); ++i) {
    if (char_scores[i] >= threshold) survivors.push_back(i);
  }
  return survivors;
}

Prediction Classify(std::string_view text, const ClassifierModel& model) {
  Prediction prediction;
  const TokenStream tokens = Tokenize(text);
  if (tokens.words.empty() && tokens.chars.empty()) {
    prediction.outcome = AbstainReason::kEmptyInput;
    return prediction;
  }

  const ScoringParams& params = model.params();
  const std::vector<double> char_scores = CharScores(tokens.chars, model);
  const std::vector<size_t> survivors =
      Survivors(char_scores, params.char_cutoff_ratio);
  if (survivors.empty()) {
    prediction.outcome = AbstainReason::kNoCharEvidence;
    return prediction;
  }

  bool any_words = false;
  prediction.breakdown.reserve(survivors.size());
  for (size_t i : survivors) {
    const double word_score = WordScore(tokens.words, model.profile(i).words,
                                        params.presence_weight, params.damping);
    any_words = any_words || word_score > 0.0;
    prediction.breakdown.push_back({model.languages()[i], char_scores[i],
                                    word_score, char_scores[i] * word_score});
  }
  // Survivors arrive in ascending code order, so a stable sort settles ties
  // by code.
  std::stable_sort(prediction.breakdown.begin(), prediction.breakdown.end(),
                   [](const LanguageScore& a, const LanguageScore& b) {
                     return a.combined > b.combined;
                   });
  if (!any_words) {
    prediction.outcome = AbstainReason::kNoWordEvidence;
    return prediction;
  }
  const LanguageScore& best = prediction.breakdown.front();
  prediction.outcome = Winner{best.language, best.combined};
  return prediction;
}

std::optional<std::string> GetWinner(std::string_view text,
                                     const ClassifierModel& model) {
  const Prediction p = Classify(text, model);
  if (const Winner* w = p.winner()) return w->language;
  return std::nullopt;
}

std::optional<Winner> GetWinnerScore(std::string_view text,
                                     const ClassifierModel& model) {
  const Prediction p = Classify(text, model);
  if (const Winner* w = p.winner()) return *w;
  return std::nullopt;
}

std::vector<std::pair<std::string, double>> GetLanguageScores(
    std::string_view text, const ClassifierModel& model) {
  std::vector<std::pair<std::string, double>> scores;
  for (const LanguageScore& s : Classify(text, model).breakdown) {
    scores.emplace_back(s.language, s.combined);
  }
  return scores;
}

std::vector<Prediction> ClassifyBatchSerial(std::span<const std::string> texts,
                                            const ClassifierModel& model) {
  std::vector<Prediction> out;
  out.reserve(texts.size());
  for (const std::string& text : texts) out.push_back(Classify(text, model));
  return out;
}

std::vector<Prediction> ClassifyBatch(std::span<const std::string> texts,
                                      const ClassifierModel& model) {
  std::vector<Prediction> out(texts.size());
  const auto n = static_cast<std::ptrdiff_t>(texts.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = Classify(texts[i], model);
  return out;
}

}  // namespace rrlangid
