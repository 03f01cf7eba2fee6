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

#include "rrlangid/trainer.h"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <fstream>
#include <sstream>

#include "rrlangid/tokenizer.h"

namespace rrlangid {
namespace {

struct Job {
  const std::string* language;
  const std::filesystem::path* path;
};

std::vector<Job> Jobs(const CorpusSpec& spec) {
  std::vector<Job> jobs;
  for (const auto& [language, paths] : spec.files) {
    if (!IsValidLanguageCode(language)) {
      throw DataError("invalid language code '" + language + "'");
    }
    if (paths.empty()) {
      throw DataError("language '" + language + "' has no training files");
    }
    for (const auto& path : paths) jobs.push_back({&language, &path});
  }
  return jobs;
}

LanguageCounts CountFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw DataError("error reading " + path.string());
  LanguageCounts counts;
  counts.Add(buf.str());
  return counts;
}

CorpusCounts MergeJobs(const std::vector<Job>& jobs,
                       const std::vector<LanguageCounts>& per_job) {
  CorpusCounts result;
  for (size_t i = 0; i < jobs.size(); ++i) {
    result[*jobs[i].language].Merge(per_job[i]);
  }
  return result;
}

}  // namespace

void LanguageCounts::Add(std::string_view text) {
  const TokenStream tokens = Tokenize(text);
  for (const std::string& w : tokens.words) ++words[w];
  for (char32_t c : tokens.chars) ++chars[c];
  num_words += tokens.words.size();
  num_chars += tokens.chars.size();
}

void LanguageCounts::Merge(const LanguageCounts& other) {
  for (const auto& [w, n] : other.words) words[w] += n;
  for (const auto& [c, n] : other.chars) chars[c] += n;
  num_words += other.num_words;
  num_chars += other.num_chars;
}

CorpusCounts CountCorpusSerial(const CorpusSpec& spec) {
  const std::vector<Job> jobs = Jobs(spec);
  std::vector<LanguageCounts> per_job;
  per_job.reserve(jobs.size());
  for (const Job& job : jobs) per_job.push_back(CountFile(*job.path));
  return MergeJobs(jobs, per_job);
}

CorpusCounts CountCorpus(const CorpusSpec& spec) {
  const std::vector<Job> jobs = Jobs(spec);
  std::vector<LanguageCounts> per_job(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  const auto n = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      per_job[i] = CountFile(*jobs[i].path);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return MergeJobs(jobs, per_job);
}

RankTable RankWords(const std::string& language,
                    const std::unordered_map<std::string, uint64_t>& counts,
                    size_t capacity) {
  std::vector<RankedWord> entries;
  entries.reserve(counts.size());
  for (const auto& [w, n] : counts) entries.push_back({w, n});
  auto order = [](const RankedWord& a, const RankedWord& b) {
    return a.count != b.count ? a.count > b.count : a.word < b.word;
  };
  if (entries.size() > capacity) {
    std::partial_sort(entries.begin(),
                      entries.begin() + static_cast<std::ptrdiff_t>(capacity),
                      entries.end(), order);
    entries.resize(capacity);
  } else {
    std::sort(entries.begin(), entries.end(), order);
  }
  return RankTable(language, std::move(entries), capacity);
}

ClassifierModel BuildModel(const CorpusCounts& counts, size_t capacity) {
  std::vector<LanguageProfile> profiles;
  for (const auto& [language, c] : counts) {
    if (c.chars.empty()) {
      throw DataError("language '" + language +
                      "': corpus contains no characters");
    }
    profiles.push_back({RankWords(language, c.words, capacity),
                        CharFreqTable(language, c.chars)});
  }
  return ClassifierModel(std::move(profiles));
}

ClassifierModel Train(const CorpusSpec& spec) {
  return BuildModel(CountCorpus(spec), spec.capacity);
}

}  // namespace rrlangid
