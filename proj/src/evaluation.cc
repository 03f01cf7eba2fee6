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

#include "rrlangid/evaluation.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rrlangid/utf8.h"

namespace rrlangid {
namespace fs = std::filesystem;
namespace {

double Percent(size_t part, size_t whole) {
  return whole == 0
             ? 0.0
             : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

double F1(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

std::string Fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string PadLeft(const std::string& s, size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::vector<std::string> SampleChunks(std::string_view text,
                                      size_t target_size) {
  if (target_size == 0) {
    throw std::invalid_argument("target size must be at least 1");
  }
  std::vector<std::string> chunks;
  std::string current;
  size_t length = 0;
  for (std::string_view word : SplitWhitespace(text)) {
    if (!current.empty()) {
      current += ' ';
      ++length;
    }
    current.append(word);
    length += CodePointLength(word);
    if (length >= target_size) {
      chunks.push_back(std::move(current));
      current.clear();
      length = 0;
    }
  }
  if (!current.empty()) chunks.push_back(std::move(current));
  return chunks;
}

EvalReport Evaluate(std::span<const LabeledPrediction> predictions,
                    const EvalOptions& options) {
  if (predictions.empty()) {
    throw std::invalid_argument("no predictions to evaluate");
  }
  std::map<std::string, size_t> support, true_positives, predicted;
  EvalReport report;
  report.total = predictions.size();
  size_t correct = 0;
  for (const LabeledPrediction& p : predictions) {
    ++support[p.truth];
    if (!p.predicted) {
      ++report.abstentions;
      continue;
    }
    ++predicted[*p.predicted];
    if (*p.predicted == p.truth) {
      ++true_positives[p.truth];
      ++correct;
    }
  }
  report.accuracy = Percent(correct, report.total);

  for (const auto& [label, n] : support) {
    ClassMetrics m;
    m.label = label;
    m.support = n;
    m.precision = Percent(true_positives[label], predicted[label]);
    m.recall = Percent(true_positives[label], n);
    m.f1 = F1(m.precision, m.recall);
    report.classes.push_back(m);
  }
  if (options.abstain_as_class) {
    // Nothing is truly "abstain", so the extra class scores zero throughout.
    report.classes.push_back({std::string(kAbstainClassLabel), 0, 0, 0, 0});
  }

  const auto n_classes = static_cast<double>(report.classes.size());
  const auto total = static_cast<double>(report.total);
  report.macro.label = "macro avg";
  report.weighted.label = "weighted avg";
  for (const ClassMetrics& m : report.classes) {
    report.macro.precision += m.precision;
    report.macro.recall += m.recall;
    report.macro.f1 += m.f1;
    const auto w = static_cast<double>(m.support);
    report.weighted.precision += w * m.precision;
    report.weighted.recall += w * m.recall;
    report.weighted.f1 += w * m.f1;
  }
  report.macro.precision /= n_classes;
  report.macro.recall /= n_classes;
  report.macro.f1 /= n_classes;
  report.weighted.precision /= total;
  report.weighted.recall /= total;
  report.weighted.f1 /= total;
  report.macro.support = report.weighted.support = report.total;
  return report;
}

std::string FormatReport(const EvalReport& report) {
  constexpr size_t kLabel = 14;
  constexpr size_t kCol = 11;
  std::ostringstream out;
  out << PadLeft("", kLabel) << PadLeft("precision", kCol)
      << PadLeft("recall", kCol) << PadLeft("f1-score", kCol)
      << PadLeft("support", kCol) << "\n\n";
  auto row = [&](const ClassMetrics& m) {
    out << PadLeft(m.label, kLabel) << PadLeft(Fixed2(m.precision), kCol)
        << PadLeft(Fixed2(m.recall), kCol) << PadLeft(Fixed2(m.f1), kCol)
        << PadLeft(std::to_string(m.support), kCol) << "\n";
  };
  for (const ClassMetrics& m : report.classes) row(m);
  out << "\n"
      << PadLeft("accuracy", kLabel) << PadLeft("", 2 * kCol)
      << PadLeft(Fixed2(report.accuracy), kCol)
      << PadLeft(std::to_string(report.total), kCol) << "\n";
  row(report.macro);
  row(report.weighted);
  out << PadLeft("abstained", kLabel) << PadLeft("", 3 * kCol)
      << PadLeft(std::to_string(report.abstentions), kCol) << "\n";
  return out.str();
}

std::string FormatReportTsv(const EvalReport& report) {
  std::ostringstream out;
  out << "class\tprecision\trecall\tf1\tsupport\n";
  auto row = [&](const ClassMetrics& m) {
    out << m.label << '\t' << Fixed2(m.precision) << '\t' << Fixed2(m.recall)
        << '\t' << Fixed2(m.f1) << '\t' << m.support << '\n';
  };
  for (const ClassMetrics& m : report.classes) row(m);
  out << "accuracy\t\t\t" << Fixed2(report.accuracy) << '\t' << report.total
      << '\n';
  row(report.macro);
  row(report.weighted);
  out << "abstained\t\t\t\t" << report.abstentions << '\n';
  return out.str();
}

ExperimentResult RunExperiment(const ClassifierModel& model,
                               const TestCorpus& corpus, size_t target_size,
                               const EvalOptions& options) {
  ExperimentResult result;
  for (const auto& [language, paths] : corpus) {
    for (const fs::path& path : paths) {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw DataError("cannot read " + path.string());
      std::ostringstream buf;
      buf << in.rdbuf();
      for (std::string& text : SampleChunks(buf.str(), target_size)) {
        result.chunks.push_back({std::move(text), language, path.string()});
      }
    }
  }
  std::vector<std::string> texts;
  texts.reserve(result.chunks.size());
  for (const Chunk& c : result.chunks) texts.push_back(c.text);
  result.predictions = ClassifyBatch(texts, model);

  std::vector<LabeledPrediction> labeled;
  labeled.reserve(texts.size());
  for (size_t i = 0; i < texts.size(); ++i) {
    LabeledPrediction lp{result.chunks[i].label, std::nullopt};
    if (const Winner* w = result.predictions[i].winner()) {
      lp.predicted = w->language;
    }
    labeled.push_back(std::move(lp));
  }
  result.report = Evaluate(labeled, options);
  return result;
}

std::map<std::string, std::vector<fs::path>> ListCorpusDir(
    const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw DataError("corpus directory not found: " + root.string());
  }
  std::map<std::string, std::vector<fs::path>> files;
  for (const fs::directory_entry& dir : fs::directory_iterator(root)) {
    if (!dir.is_directory()) continue;
    const std::string code = dir.path().filename().string();
    if (!IsValidLanguageCode(code)) continue;
    std::vector<fs::path>& list = files[code];
    for (const fs::directory_entry& f : fs::directory_iterator(dir.path())) {
      if (f.is_regular_file()) list.push_back(f.path());
    }
    std::sort(list.begin(), list.end());
  }
  return files;
}

}  // namespace rrlangid
