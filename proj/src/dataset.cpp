// Copyright 2026 The dirpat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>

#include "dirpat/detail/binary_io.hpp"
#include "dirpat/detail/rng.hpp"
#include "dirpat/error.hpp"
#include "dirpat/evaluation.hpp"

namespace dirpat {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// RFC 4180-style split of a single line; returns false on an unterminated quote.
bool split_csv(const std::string& line, std::vector<std::string>& fields) {
  fields.clear();
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
      was_quoted = true;
    } else if (ch == ',') {
      fields.push_back(was_quoted ? cur : trim(cur));
      cur.clear();
      was_quoted = false;
    } else {
      cur += ch;
    }
  }
  if (quoted) return false;
  fields.push_back(was_quoted ? cur : trim(cur));
  return true;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string lower(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

}  // namespace

std::vector<int> Dataset::labels() const {
  std::vector<int> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.label);
  return out;
}

Dataset load_manifest(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    fail(ErrorCode::MissingFile, "manifest not found: " + path.string());
  }
  std::ifstream in(path);
  if (!in) fail(ErrorCode::MissingFile, "cannot open manifest " + path.string());
  const auto base = path.parent_path();
  const std::string where = path.string();

  std::string line;
  std::vector<std::string> fields;
  std::size_t line_no = 0;
  bool have_header = false;
  bool has_subject = false;
  Dataset ds;
  std::unordered_map<std::string, int> label_index;
  std::set<std::string> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::string row = where + ":" + std::to_string(line_no);
    if (!split_csv(line, fields)) fail(ErrorCode::MalformedRow, row + ": unterminated quote");
    if (!have_header) {
      if (fields.size() < 2 || fields.size() > 3 || lower(fields[0]) != "path" ||
          lower(fields[1]) != "label" || (fields.size() == 3 && lower(fields[2]) != "subject")) {
        fail(ErrorCode::MalformedRow, row + ": header must be path,label[,subject]");
      }
      has_subject = fields.size() == 3;
      have_header = true;
      continue;
    }
    const std::size_t expected = has_subject ? 3 : 2;
    if (fields.size() != expected) {
      fail(ErrorCode::MalformedRow, row + ": expected " + std::to_string(expected) +
                                        " fields, found " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) fail(ErrorCode::MalformedRow, row + ": empty path");
    if (fields[1].empty()) fail(ErrorCode::MalformedRow, row + ": empty label");

    std::filesystem::path image = fields[0];
    if (image.is_relative()) image = base / image;
    image = image.lexically_normal();
    if (!seen.insert(image.string()).second) {
      fail(ErrorCode::MalformedRow, row + ": duplicate path " + fields[0]);
    }
    if (!std::filesystem::is_regular_file(image, ec)) {
      fail(ErrorCode::UnresolvablePath, row + ": image not found: " + image.string());
    }

    auto [it, inserted] = label_index.try_emplace(fields[1], static_cast<int>(ds.class_names.size()));
    if (inserted) ds.class_names.push_back(fields[1]);

    Sample s;
    s.path = image;
    s.label = it->second;
    if (has_subject && !fields[2].empty()) s.subject = fields[2];
    ds.samples.push_back(std::move(s));
  }
  if (!have_header) fail(ErrorCode::EmptyDataset, where + ": manifest is empty");
  if (ds.samples.empty()) fail(ErrorCode::EmptyDataset, where + ": manifest lists no samples");
  return ds;
}

void write_manifest(const Dataset& dataset, const std::filesystem::path& path) {
  const bool has_subject = std::any_of(dataset.samples.begin(), dataset.samples.end(),
                                       [](const Sample& s) { return s.subject.has_value(); });
  const auto base = path.parent_path();
  std::ostringstream out;
  out << (has_subject ? "path,label,subject\n" : "path,label\n");
  for (const auto& s : dataset.samples) {
    auto rel = s.path.lexically_relative(base.empty() ? std::filesystem::path(".") : base);
    if (rel.empty() || *rel.begin() == "..") rel = s.path;
    out << csv_field(rel.generic_string()) << ','
        << csv_field(dataset.class_names.at(static_cast<std::size_t>(s.label)));
    if (has_subject) out << ',' << csv_field(s.subject.value_or(""));
    out << '\n';
  }
  detail::write_text_file(path, out.str());
}

std::vector<std::size_t> FoldPlan::fold_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(folds), 0);
  for (int f : assignment) ++sizes[static_cast<std::size_t>(f)];
  return sizes;
}

FoldPlan stratified_folds(std::span<const int> labels, int num_classes, int folds,
                          std::uint64_t seed) {
  if (folds < 2) fail(ErrorCode::InvalidArgument, "need at least 2 folds");
  if (labels.size() < static_cast<std::size_t>(folds)) {
    fail(ErrorCode::TooFewSamples, std::to_string(labels.size()) + " samples cannot fill " +
                                       std::to_string(folds) + " folds");
  }
  std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(num_classes));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= num_classes) {
      fail(ErrorCode::InvalidArgument, "label out of range at sample " + std::to_string(i));
    }
    by_class[static_cast<std::size_t>(labels[i])].push_back(i);
  }

  FoldPlan plan;
  plan.folds = folds;
  plan.assignment.assign(labels.size(), 0);
  detail::Rng rng(seed);
  int next_fold = 0;
  for (auto& members : by_class) {
    rng.shuffle(std::span<std::size_t>(members));
    for (std::size_t idx : members) {
      plan.assignment[idx] = next_fold;
      next_fold = (next_fold + 1) % folds;
    }
  }
  return plan;
}

FoldPlan subject_folds(const Dataset& dataset, int folds, std::uint64_t seed) {
  if (folds < 2) fail(ErrorCode::InvalidArgument, "need at least 2 folds");
  std::vector<std::string> subjects;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < dataset.samples.size(); ++i) {
    const auto& subject = dataset.samples[i].subject;
    if (!subject) {
      fail(ErrorCode::InvalidArgument,
           "subject-independent folds need a subject on every sample (missing at row " +
               std::to_string(i + 1) + ")");
    }
    if (index.try_emplace(*subject, subjects.size()).second) subjects.push_back(*subject);
  }
  if (subjects.size() < static_cast<std::size_t>(folds)) {
    fail(ErrorCode::TooFewSamples, std::to_string(subjects.size()) + " subjects cannot fill " +
                                       std::to_string(folds) + " folds");
  }
  std::vector<std::size_t> order(subjects.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  detail::Rng rng(seed);
  rng.shuffle(std::span<std::size_t>(order));
  std::vector<int> subject_fold(subjects.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    subject_fold[order[i]] = static_cast<int>(i % static_cast<std::size_t>(folds));
  }

  FoldPlan plan;
  plan.folds = folds;
  for (const auto& s : dataset.samples) plan.assignment.push_back(subject_fold[index.at(*s.subject)]);
  return plan;
}

}  // namespace dirpat
