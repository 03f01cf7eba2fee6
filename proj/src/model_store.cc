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

#include "rrlangid/model_store.h"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "rrlangid/utf8.h"

namespace rrlangid {
namespace fs = std::filesystem;
namespace {

constexpr std::string_view kWordsSuffix = "_words";
constexpr std::string_view kCharsSuffix = "_chars";

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw DataError("error reading " + path.string());
  return buf.str();
}

void WriteFile(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << contents;
  out.close();
  if (!out) throw DataError("error writing " + path.string());
}

// Splits file contents into lines; a trailing newline does not start a line.
std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void LineError(const fs::path& path, size_t line,
                            const std::string& what) {
  throw DataError(path.string() + ":" + std::to_string(line) + ": " + what);
}

// Parses "key<TAB>count" with a positive integer count.
std::pair<std::string_view, uint64_t> ParseCountLine(std::string_view line,
                                                     const fs::path& path,
                                                     size_t line_no) {
  const size_t tab = line.find('\t');
  if (tab == std::string_view::npos || line.find('\t', tab + 1) != line.npos) {
    LineError(path, line_no, "expected exactly one tab");
  }
  const std::string_view key = line.substr(0, tab);
  const std::string_view num = line.substr(tab + 1);
  uint64_t count = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), count);
  if (ec != std::errc() || ptr != num.data() + num.size() || count == 0) {
    LineError(path, line_no, "count must be a positive integer");
  }
  return {key, count};
}

RankTable LoadRankTable(const std::string& language, const fs::path& path,
                        size_t capacity) {
  const std::string text = ReadFile(path);
  std::vector<RankedWord> entries;
  std::unordered_set<std::string_view> seen;
  size_t line_no = 0;
  for (std::string_view line : Lines(text)) {
    ++line_no;
    auto [word, count] = ParseCountLine(line, path, line_no);
    if (!IsValidRankEntry(word)) {
      LineError(path, line_no, "invalid word '" + std::string(word) + "'");
    }
    if (!seen.insert(word).second) {
      LineError(path, line_no, "duplicate word '" + std::string(word) + "'");
    }
    entries.push_back({std::string(word), count});
  }
  return RankTable(language, std::move(entries), capacity);
}

CharFreqTable LoadCharTable(const std::string& language, const fs::path& path) {
  const std::string text = ReadFile(path);
  std::map<char32_t, uint64_t> counts;
  size_t line_no = 0;
  for (std::string_view line : Lines(text)) {
    ++line_no;
    auto [key, count] = ParseCountLine(line, path, line_no);
    const std::u32string cs = DecodeUtf8(key);
    if (cs.size() != 1 || IsWhitespace(cs[0])) {
      LineError(path, line_no, "expected a single non-space character");
    }
    if (!counts.emplace(cs[0], count).second) {
      LineError(path, line_no, "duplicate character");
    }
  }
  if (counts.empty()) {
    throw DataError("language '" + language + "': " + path.string() +
                    " is empty");
  }
  return CharFreqTable(language, std::move(counts));
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

ClassifierModel LoadModel(const fs::path& dir, size_t capacity,
                          const ScoringParams& params) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw DataError("model directory not found: " + dir.string());
  }
  std::map<std::string, std::pair<fs::path, fs::path>> files;
  for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    const bool words = EndsWith(name, kWordsSuffix);
    if (!words && !EndsWith(name, kCharsSuffix)) continue;
    const std::string code = name.substr(0, name.size() - kWordsSuffix.size());
    if (!IsValidLanguageCode(code)) {
      throw DataError("invalid language code in file name " +
                      entry.path().string());
    }
    fs::path& slot = words ? files[code].first : files[code].second;
    slot = entry.path();
  }

  std::vector<LanguageProfile> profiles;
  for (const auto& [code, paths] : files) {
    if (paths.first.empty()) {
      throw DataError("language '" + code + "': missing " + code + "_words");
    }
    if (paths.second.empty()) {
      throw DataError("language '" + code + "': missing " + code + "_chars");
    }
    profiles.push_back({LoadRankTable(code, paths.first, capacity),
                        LoadCharTable(code, paths.second)});
  }
  return ClassifierModel(std::move(profiles), params);
}

std::string SerializeRankTable(const RankTable& table) {
  std::string out;
  for (const RankedWord& e : table.entries()) {
    out += e.word;
    out += '\t';
    out += std::to_string(e.count);
    out += '\n';
  }
  return out;
}

std::string SerializeCharTable(const CharFreqTable& table) {
  std::vector<std::pair<char32_t, uint64_t>> rows(table.counts().begin(),
                                                  table.counts().end());
  // Code point order is UTF-8 byte order, so the stable sort keeps ties in
  // ascending byte order.
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  std::string out;
  for (const auto& [c, n] : rows) {
    AppendUtf8(c, &out);
    out += '\t';
    out += std::to_string(n);
    out += '\n';
  }
  return out;
}

void SaveModel(const ClassifierModel& model, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw DataError("cannot create " + dir.string() + ": " + ec.message());

  // Drop tables of languages the model no longer has, so that loading the
  // directory yields exactly this model.
  const std::set<std::string> keep(model.languages().begin(),
                                   model.languages().end());
  for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (!entry.is_regular_file() || name.size() != 2 + kWordsSuffix.size()) {
      continue;
    }
    if (!EndsWith(name, kWordsSuffix) && !EndsWith(name, kCharsSuffix)) {
      continue;
    }
    if (!keep.count(name.substr(0, 2))) fs::remove(entry.path(), ec);
  }

  for (const LanguageProfile& p : model.profiles()) {
    const std::string& code = p.words.language();
    WriteFile(dir / (code + std::string(kWordsSuffix)),
              SerializeRankTable(p.words));
    WriteFile(dir / (code + std::string(kCharsSuffix)),
              SerializeCharTable(p.chars));
  }
}

void OverridesSet::Insert(std::string language, std::string word, size_t rank) {
  ops.push_back(
      {OverrideOp::Kind::kInsert, std::move(language), std::move(word), rank});
}

void OverridesSet::Delete(std::string language, std::string word) {
  ops.push_back(
      {OverrideOp::Kind::kDelete, std::move(language), std::move(word), 0});
}

OverridesSet ParseOverrides(std::istream& in, const std::string& source_name) {
  OverridesSet result;
  std::string line;
  size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw DataError(source_name + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    for (std::string f; std::getline(ls, f, '\t');) fields.push_back(f);
    if (fields.size() < 3) fail("expected LL<TAB>+|-<TAB>word[<TAB>rank]");
    const std::string& code = fields[0];
    if (!IsValidLanguageCode(code))
      fail("invalid language code '" + code + "'");
    if (!IsValidRankEntry(fields[2])) fail("invalid word '" + fields[2] + "'");
    if (fields[1] == "+") {
      if (fields.size() != 4) fail("insertion needs a rank");
      size_t rank = 0;
      const std::string& r = fields[3];
      auto [ptr, ec] = std::from_chars(r.data(), r.data() + r.size(), rank);
      if (ec != std::errc() || ptr != r.data() + r.size() || rank < 1) {
        fail("rank must be an integer >= 1");
      }
      result.Insert(code, fields[2], rank);
    } else if (fields[1] == "-") {
      if (fields.size() != 3) fail("deletion takes no rank");
      result.Delete(code, fields[2]);
    } else {
      fail("operation must be '+' or '-'");
    }
  }
  return result;
}

OverridesSet ReadOverrides(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  return ParseOverrides(in, path.string());
}

std::string FormatOverrides(const OverridesSet& overrides) {
  std::string out;
  for (const OverrideOp& op : overrides.ops) {
    out += op.language;
    if (op.kind == OverrideOp::Kind::kInsert) {
      out += "\t+\t" + op.word + "\t" + std::to_string(op.rank) + "\n";
    } else {
      out += "\t-\t" + op.word + "\n";
    }
  }
  return out;
}

void WriteOverrides(const OverridesSet& overrides, const fs::path& path) {
  WriteFile(path, FormatOverrides(overrides));
}

ClassifierModel ApplyOverrides(const ClassifierModel& model,
                               const OverridesSet& overrides) {
  std::vector<LanguageProfile> profiles = model.profiles();
  for (const OverrideOp& op : overrides.ops) {
    const std::optional<size_t> i = model.IndexOf(op.language);
    if (!i)
      throw DataError("override for unknown language '" + op.language + "'");
    RankTable& table = profiles[*i].words;
    table = op.kind == OverrideOp::Kind::kInsert
                ? table.WithInsertion(op.word, op.rank)
                : table.WithDeletion(op.word);
  }
  return ClassifierModel(std::move(profiles), model.params());
}

}  // namespace rrlangid
