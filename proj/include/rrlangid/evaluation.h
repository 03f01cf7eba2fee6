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

#ifndef RRLANGID_EVALUATION_H_
#define RRLANGID_EVALUATION_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rrlangid/classifier.h"
#include "rrlangid/model.h"

namespace rrlangid {

struct Chunk {
  std::string text;
  std::string label;
  std::string source;
};

// Greedy test-sample extraction. Whitespace-separated words are joined with
// single spaces into a chunk until its length in code points reaches
// `target_size`; the chunk then closes and the next one starts. Only the
// final chunk may fall short. Throws std::invalid_argument if target_size is
// zero.
std::vector<std::string> SampleChunks(std::string_view text,
                                      size_t target_size);

struct LabeledPrediction {
  std::string truth;
  std::optional<std::string> predicted;  // nullopt = abstained
};

// Percentages in [0, 100].
struct ClassMetrics {
  std::string label;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  size_t support = 0;

  bool operator==(const ClassMetrics&) const = default;
};

struct EvalOptions {
  // Count abstention as an extra class with zero scores in the macro
  // averages. Accuracy and weighted averages are unaffected.
  bool abstain_as_class = false;
};

struct EvalReport {
  // One row per true label, ascending. With abstain_as_class a final
  // "abstain" row with zero support is appended.
  std::vector<ClassMetrics> classes;
  double accuracy = 0.0;
  ClassMetrics macro;
  ClassMetrics weighted;
  size_t total = 0;
  size_t abstentions = 0;

  bool operator==(const EvalReport&) const = default;
};

inline constexpr std::string_view kAbstainClassLabel = "abstain";

// Abstentions count as errors against the true class. Precision of a class
// nobody predicted is 0. Throws std::invalid_argument on empty input.
EvalReport Evaluate(std::span<const LabeledPrediction> predictions,
                    const EvalOptions& options = {});

// Plain-text table with two decimals per percentage.
std::string FormatReport(const EvalReport& report);
// Tab-separated: header "class precision recall f1 support", one row per
// class, then accuracy, macro avg, weighted avg and abstained rows. Cells
// that do not apply are empty.
std::string FormatReportTsv(const EvalReport& report);

using TestCorpus = std::map<std::string, std::vector<std::filesystem::path>>;

struct ExperimentResult {
  std::vector<Chunk> chunks;
  std::vector<Prediction> predictions;
  EvalReport report;
};

// Chunks every file, labels each chunk with its file's language, classifies
// the chunks and scores the result. Throws DataError for unreadable files.
ExperimentResult RunExperiment(const ClassifierModel& model,
                               const TestCorpus& corpus, size_t target_size,
                               const EvalOptions& options = {});

// Every regular file of every two-letter subdirectory of `root`, sorted.
// Shared by the training and evaluation front ends.
std::map<std::string, std::vector<std::filesystem::path>> ListCorpusDir(
    const std::filesystem::path& root);

}  // namespace rrlangid

#endif  // RRLANGID_EVALUATION_H_
