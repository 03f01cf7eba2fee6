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

#ifndef RRLANGID_CURATION_H_
#define RRLANGID_CURATION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rrlangid/model.h"
#include "rrlangid/model_store.h"

namespace rrlangid {

// A frequent word in texts assigned to `language` that the language's rank
// table lacks.
struct CandidateWord {
  std::string language;
  std::string word;
  // 1-based rank among all words of the language's texts, known or not.
  size_t conversational_rank = 0;
  // Rank in the existing table. Harvest only emits absent words, so this is
  // empty for its output.
  std::optional<size_t> base_rank;

  bool operator==(const CandidateWord&) const = default;
};

// Classifies `texts` (abstentions are skipped), ranks the words of each
// language's texts by frequency and returns those among the top `top_n` that
// are missing from that language's rank table. A candidate is dropped when
// its own characters do not keep its language above the character cutoff.
// Output is ordered by language, then conversational rank.
std::vector<CandidateWord> Harvest(std::span<const std::string> texts,
                                   const ClassifierModel& model,
                                   size_t top_n = 100);

// One insertion per candidate at its conversational rank, in ascending rank
// order within each language.
OverridesSet ToOverrides(std::span<const CandidateWord> candidates);

}  // namespace rrlangid

#endif  // RRLANGID_CURATION_H_
