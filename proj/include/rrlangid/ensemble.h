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

#ifndef RRLANGID_ENSEMBLE_H_
#define RRLANGID_ENSEMBLE_H_

#include <string>
#include <string_view>
#include <vector>

#include "rrlangid/model.h"

namespace rrlangid {

// A classifier that always names a language from a fixed set.
class FallbackClassifier {
 public:
  virtual ~FallbackClassifier() = default;

  virtual std::string ClassifyForced(std::string_view text) const = 0;
  virtual const std::vector<std::string>& languages() const = 0;
};

// Forced-choice stand-in built from a model's character tables: picks the
// language whose table gives the text's characters the highest total
// frequency, ties and no-evidence cases going to the smallest code.
class CharTableFallback : public FallbackClassifier {
 public:
  // Throws std::invalid_argument for a model with no languages.
  explicit CharTableFallback(ClassifierModel model);

  std::string ClassifyForced(std::string_view text) const override;
  const std::vector<std::string>& languages() const override {
    return model_.languages();
  }

 private:
  ClassifierModel model_;
};

// The classifier's winner when there is one, otherwise the fallback's
// answer. Throws DataError if the fallback answers outside its declared set.
std::string EnsembleClassify(std::string_view text,
                             const ClassifierModel& model,
                             const FallbackClassifier& fallback);

}  // namespace rrlangid

#endif  // RRLANGID_ENSEMBLE_H_
