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

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>

#include "dirpat/evaluation.hpp"

namespace dirpat {

const char* const kProtocolCaveat =
    "Accuracy depends on protocol choices (fold count, fold seeding, frame selection, "
    "subject overlap between folds, preprocessing and SVM settings); compare figures only "
    "across runs that share this configuration.";

namespace {

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", 100.0 * fraction);
  return buf;
}

nlohmann::json config_json(const EvaluationReport& r) {
  const auto& c = r.config;
  return {{"method", to_string(c.method)},
          {"grid", to_string(c.grid)},
          {"norm", to_string(c.norm)},
          {"folds", c.folds},
          {"seed", c.seed},
          {"subject_independent", c.subject_independent},
          {"svm", {{"kernel", "linear"}, {"C", c.svm.c}, {"epochs", c.svm.epochs},
                   {"seed", c.svm.seed}, {"multiclass", "one-vs-one"},
                   {"standardize", true}}},
          {"source", r.source}};
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string report_to_json(const EvaluationReport& report) {
  nlohmann::json j;
  j["config"] = config_json(report);
  j["class_names"] = report.class_names;
  j["fold_sizes"] = report.fold_sizes;
  j["per_fold_accuracy"] = report.per_fold_accuracy;
  j["mean_accuracy"] = report.mean_accuracy;
  j["total"] = report.total();
  j["correct"] = report.correct();
  j["confusion"] = report.confusion;
  j["confusion_orientation"] = "rows are true classes, columns are predicted classes";
  j["caveat"] = kProtocolCaveat;
  return j.dump(2) + "\n";
}

std::string report_to_text(const EvaluationReport& report) {
  const auto& c = report.config;
  std::ostringstream out;
  out << "Recognition rate (%)\n";
  out << pad("Method", 10) << pad("Grid", 8) << pad("Norm", 6) << pad("Folds", 7)
      << "Accuracy\n";
  out << pad(std::string(to_string(c.method)), 10) << pad(to_string(c.grid), 8)
      << pad(std::string(to_string(c.norm)), 6) << pad(std::to_string(c.folds), 7)
      << percent(report.mean_accuracy) << "\n\n";

  out << "Per-fold accuracy (%):";
  for (double a : report.per_fold_accuracy) out << ' ' << percent(a);
  out << "\n\n";

  out << "Confusion matrix (rows: true class, columns: predicted class)\n";
  std::size_t width = 4;
  for (const auto& name : report.class_names) width = std::max(width, name.size() + 2);
  for (const auto& row : report.confusion) {
    for (auto v : row) width = std::max(width, std::to_string(v).size() + 2);
  }
  out << std::string(width, ' ');
  for (const auto& name : report.class_names) out << pad(name, width);
  out << '\n';
  for (std::size_t i = 0; i < report.confusion.size(); ++i) {
    out << pad(report.class_names[i], width);
    for (auto v : report.confusion[i]) out << pad(std::to_string(v), width);
    out << '\n';
  }
  out << "\nNote: " << kProtocolCaveat << '\n';
  return out.str();
}

std::string confusion_to_csv(const EvaluationReport& report) {
  std::ostringstream out;
  out << "true\\predicted";
  for (const auto& name : report.class_names) out << ',' << name;
  out << '\n';
  for (std::size_t i = 0; i < report.confusion.size(); ++i) {
    out << report.class_names[i];
    for (auto v : report.confusion[i]) out << ',' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace dirpat
