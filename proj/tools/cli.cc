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

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "rrlangid/classifier.h"
#include "rrlangid/curation.h"
#include "rrlangid/evaluation.h"
#include "rrlangid/model_store.h"
#include "rrlangid/trainer.h"

namespace rrlangid {
namespace fs = std::filesystem;
namespace {

// Printed instead of a language code when the classifier abstains.
constexpr const char* kAbstainSentinel = "??";

struct Options {
  std::string model_dir;
  std::string corpus_dir;
  std::string input = "-";
  std::string output;
  std::string report;
  std::string tsv;
  std::string texts;
  std::string overrides;
  std::string mode = "winner";
  size_t capacity = kDefaultCapacity;
  size_t target = 256;
  size_t top_n = 100;
  bool macro_abstain_class = false;
  ScoringParams params;
};

void AddScoringFlags(CLI::App* cmd, Options* o) {
  cmd->add_option("-P,--presence-weight", o->params.presence_weight,
                  "Per-match presence weight")
      ->capture_default_str();
  cmd->add_option("-D,--damping", o->params.damping, "Rank damping factor")
      ->capture_default_str();
  cmd->add_option("--cutoff", o->params.char_cutoff_ratio,
                  "Character-score cutoff ratio")
      ->capture_default_str();
  cmd->add_option("--capacity", o->capacity, "Ranks kept per language")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

std::string ReadAll(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot read " + path);
  buf << file.rdbuf();
  return buf.str();
}

std::vector<std::string> ReadLines(const std::string& path, std::istream& in) {
  std::istringstream text(ReadAll(path, in));
  std::vector<std::string> lines;
  for (std::string line; std::getline(text, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  if (!out) throw DataError("cannot write " + path.string());
}

int CmdTrain(const Options& o, std::ostream& out) {
  CorpusSpec spec;
  spec.capacity = o.capacity;
  spec.files = ListCorpusDir(o.corpus_dir);
  if (spec.files.empty()) {
    throw DataError("no language subdirectories in " + o.corpus_dir);
  }
  const CorpusCounts counts = CountCorpus(spec);
  const ClassifierModel model = BuildModel(counts, spec.capacity);
  SaveModel(model, o.model_dir);
  for (const auto& [language, c] : counts) {
    out << language << "\twords=" << c.num_words << "\tchars=" << c.num_chars
        << "\tvocabulary=" << c.words.size() << "\talphabet=" << c.chars.size()
        << "\n";
  }
  return kExitOk;
}

int CmdClassify(const Options& o, std::istream& in, std::ostream& out) {
  const ClassifierModel model = LoadModel(o.model_dir, o.capacity, o.params);
  const std::vector<std::string> lines = ReadLines(o.input, in);
  const std::vector<Prediction> predictions = ClassifyBatch(lines, model);
  out << std::fixed << std::setprecision(6);
  for (const Prediction& p : predictions) {
    const Winner* w = p.winner();
    if (o.mode == "winner") {
      out << (w ? w->language : kAbstainSentinel) << "\n";
    } else if (o.mode == "score") {
      if (w) {
        out << w->language << "\t" << w->score << "\n";
      } else {
        out << kAbstainSentinel << "\n";
      }
    } else {
      // All survivors, including on abstention.
      std::string sep;
      for (const LanguageScore& s : p.breakdown) {
        out << sep << s.language << ":" << s.combined;
        sep = " ";
      }
      out << "\n";
    }
  }
  return kExitOk;
}

int CmdSample(const Options& o, std::istream& in, std::ostream& out) {
  for (const std::string& chunk :
       SampleChunks(ReadAll(o.input, in), o.target)) {
    out << chunk << "\n";
  }
  return kExitOk;
}

int CmdEvaluate(const Options& o, std::ostream& out) {
  const ClassifierModel model = LoadModel(o.model_dir, o.capacity, o.params);
  const TestCorpus corpus = ListCorpusDir(o.corpus_dir);
  if (corpus.empty()) {
    throw DataError("no language subdirectories in " + o.corpus_dir);
  }
  EvalOptions options;
  options.abstain_as_class = o.macro_abstain_class;
  const ExperimentResult result =
      RunExperiment(model, corpus, o.target, options);
  const std::string text = FormatReport(result.report);
  WriteText(o.report, text);
  WriteText(o.tsv.empty() ? o.report + ".tsv" : o.tsv,
            FormatReportTsv(result.report));
  out << text;
  return kExitOk;
}

int CmdCurate(const Options& o, std::ostream& out) {
  const ClassifierModel model = LoadModel(o.model_dir, o.capacity, o.params);
  std::istringstream unused;
  const std::vector<std::string> texts = ReadLines(o.texts, unused);
  const std::vector<CandidateWord> candidates = Harvest(texts, model, o.top_n);
  WriteOverrides(ToOverrides(candidates), o.output);
  for (const CandidateWord& c : candidates) {
    out << c.language << "\t" << c.word << "\t" << c.conversational_rank
        << "\n";
  }
  return kExitOk;
}

int CmdApplyOverrides(const Options& o, std::ostream& out) {
  const ClassifierModel model = LoadModel(o.model_dir, o.capacity, o.params);
  const OverridesSet overrides = ReadOverrides(o.overrides);
  SaveModel(ApplyOverrides(model, overrides), o.output);
  out << "applied " << overrides.ops.size() << " edits\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Reciprocal rank language identifier", "rrlangid"};
  app.require_subcommand(1);

  CLI::App* train = app.add_subcommand("train", "Build a model from a corpus");
  train
      ->add_option("--corpus", o.corpus_dir,
                   "Directory with one subdirectory of text files per "
                   "language")
      ->required();
  train->add_option("--model", o.model_dir, "Output model directory")
      ->required();
  train->add_option("--capacity", o.capacity, "Ranks kept per language")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  CLI::App* classify =
      app.add_subcommand("classify", "Classify each input line");
  classify->add_option("--model", o.model_dir, "Model directory")->required();
  classify->add_option("--input", o.input, "Input file, '-' for stdin")
      ->capture_default_str();
  classify->add_option("--mode", o.mode, "winner, score or all")
      ->capture_default_str()
      ->check(CLI::IsMember({"winner", "score", "all"}));
  AddScoringFlags(classify, &o);

  CLI::App* sample =
      app.add_subcommand("sample", "Split a text into target-size chunks");
  sample->add_option("--input", o.input, "Input file, '-' for stdin")
      ->capture_default_str();
  sample->add_option("--target", o.target, "Target chunk length")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Score a model on a test corpus");
  evaluate->add_option("--model", o.model_dir, "Model directory")->required();
  evaluate
      ->add_option("--test", o.corpus_dir,
                   "Directory with one subdirectory per language")
      ->required();
  evaluate->add_option("--target", o.target, "Target chunk length")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  evaluate->add_option("--report", o.report, "Plain-text report path")
      ->required();
  evaluate->add_option("--tsv", o.tsv,
                       "Tabular report path (default: REPORT.tsv)");
  evaluate->add_flag("--macro-abstain-class", o.macro_abstain_class,
                     "Count abstention as a class in macro averages");
  AddScoringFlags(evaluate, &o);

  CLI::App* curate = app.add_subcommand(
      "curate", "Harvest missing frequent words into an overrides file");
  curate->add_option("--model", o.model_dir, "Model directory")->required();
  curate->add_option("--texts", o.texts, "One text per line")->required();
  curate->add_option("--top-n", o.top_n, "Words examined per language")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  curate->add_option("--output", o.output, "overrides.tsv to write")
      ->required();
  AddScoringFlags(curate, &o);

  CLI::App* apply = app.add_subcommand("apply-overrides",
                                       "Merge an overrides file into a model");
  apply->add_option("--model", o.model_dir, "Input model directory")
      ->required();
  apply->add_option("--overrides", o.overrides, "overrides.tsv")->required();
  apply->add_option("--output", o.output, "Output model directory")->required();
  apply->add_option("--capacity", o.capacity, "Ranks kept per language")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    o.params.Validate();
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "rrlangid: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "rrlangid: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (train->parsed()) return CmdTrain(o, out);
    if (classify->parsed()) return CmdClassify(o, in, out);
    if (sample->parsed()) return CmdSample(o, in, out);
    if (evaluate->parsed()) return CmdEvaluate(o, out);
    if (curate->parsed()) return CmdCurate(o, out);
    if (apply->parsed()) return CmdApplyOverrides(o, out);
  } catch (const std::exception& e) {
    err << "rrlangid: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace rrlangid
