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

#include "rrlangid/ensemble.h"

#include <algorithm>
#include <stdexcept>

#include "rrlangid/classifier.h"
#include "rrlangid/tokenizer.h"

namespace rrlangid {

CharTableFallback::CharTableFallback(ClassifierModel model)
    : model_(std::move(model)) {
  if (model_.num_languages() == 0) {
    throw std::invalid_argument("fallback needs at least one language");
  }
}

std::string CharTableFallback::ClassifyForced(std::string_view text) const {
  const std::u32string chars = Tokenize(text).chars;
  size_t best = 0;
  double best_score = -1.0;
  for (size_t i = 0; i < model_.num_languages(); ++i) {
    double score = 0.0;
    for (char32_t c : chars) score += model_.profile(i).chars.Frequency(c);
    if (score > best_score) {
      best = i;
      best_score = score;
    }
  }
  return model_.languages()[best];
}

std::string EnsembleClassify(std::string_view text,
                             const ClassifierModel& model,
                             const FallbackClassifier& fallback) {
  if (std::optional<std::string> winner = GetWinner(text, model)) {
    return *std::move(winner);
  }
  std::string answer = fallback.ClassifyForced(text);
  const auto& allowed = fallback.languages();
  if (std::find(allowed.begin(), allowed.end(), answer) == allowed.end()) {
    throw DataError("fallback answered '" + answer +
                    "', outside its declared languages");
  }
  return answer;
}

}  // namespace rrlangid
