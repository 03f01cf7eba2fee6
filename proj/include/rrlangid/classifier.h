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

#ifndef RRLANGID_CLASSIFIER_H_
#define RRLANGID_CLASSIFIER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rrlangid/model.h"

namespace rrlangid {

struct LanguageScore {
  std::string language;
  double char_score = 0.0;
  double word_score = 0.0;
  double combined = 0.0;  // char_score * word_score

  bool operator==(const LanguageScore&) const = default;
};

enum class AbstainReason {
  kEmptyInput,      // no words and no characters after tokenization
  kNoCharEvidence,  // no language recognises any character
  kNoWordEvidence,  // no surviving language recognises any word
};

const char* AbstainReasonName(AbstainReason reason);

struct Winner {
  std::string language;
  double score = 0.0;

  bool operator==(const Winner&) const = default;
};

struct Prediction {
  std::variant<Winner, AbstainReason> outcome = AbstainReason::kEmptyInput;
  // Languages that survived the character cutoff, best first. Informational
  // when abstaining.
  std::vector<LanguageScore> breakdown;

  bool abstained() const {
    return std::holds_alternative<AbstainReason>(outcome);
  }
  const Winner* winner() const { return std::get_if<Winner>(&outcome); }

  bool operator==(const Prediction&) const = default;
};

// Reciprocal-rank word score: every token found in `table` adds
// presence_weight + 1 / sqrt(damping + rank). Unknown tokens add nothing.
double WordScore(std::span<const std::string> tokens, const RankTable& table,
                 double presence_weight, double damping);

// Per-language character scores, indexed like model.languages(). Each
// character adds P(language | char) to every language, with the posterior
// taken under a uniform prior; characters no language has seen add nothing.
std::vector<double> CharScores(std::u32string_view chars,
                               const ClassifierModel& model);

// Indices of the languages scoring at least cutoff_ratio times the best
// score. Empty when every score is zero.
std::vector<size_t> Survivors(std::span<const double> char_scores,
                              double cutoff_ratio);

Prediction Classify(std::string_view text, const ClassifierModel& model);

std::optional<std::string> GetWinner(std::string_view text,
                                     const ClassifierModel& model);
std::optional<Winner> GetWinnerScore(std::string_view text,
                                     const ClassifierModel& model);
// Survivor languages and combined scores, best first; empty on most
// abstentions.
std::vector<std::pair<std::string, double>> GetLanguageScores(
    std::string_view text, const ClassifierModel& model);

// Classifies every text, in parallel with OpenMP.
std::vector<Prediction> ClassifyBatch(std::span<const std::string> texts,
                                      const ClassifierModel& model);
// Single-threaded reference for ClassifyBatch.
std::vector<Prediction> ClassifyBatchSerial(std::span<const std::string> texts,
                                            const ClassifierModel& model);

}  // namespace rrlangid

#endif  // RRLANGID_CLASSIFIER_H_
