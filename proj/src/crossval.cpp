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

#include <string>

#include "dirpat/detail/parallel.hpp"
#include "dirpat/error.hpp"
#include "dirpat/evaluation.hpp"

namespace dirpat {

std::size_t EvaluationReport::total() const {
  std::size_t n = 0;
  for (const auto& row : confusion) {
    for (auto v : row) n += v;
  }
  return n;
}

std::size_t EvaluationReport::correct() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < confusion.size(); ++i) n += confusion[i][i];
  return n;
}

std::vector<FeatureVector> extract_features(const Dataset& dataset, Method method,
                                            const RegionGrid& grid, Normalization norm,
                                            int jobs) {
  std::vector<FeatureVector> out(dataset.samples.size());
  detail::parallel_for(out.size(), jobs, [&](std::size_t i) {
    const auto& path = dataset.samples[i].path;
    try {
      out[i] = region_histograms(encode(load_grayscale(path), method), grid, norm);
    } catch (const Error& e) {
      fail(e.code(), "sample " + std::to_string(i) + " (" + path.string() + "): " + e.what());
    }
  });
  return out;
}

EvaluationReport cross_validate_features(std::span<const FeatureVector> features,
                                         std::span<const int> labels,
                                         const std::vector<std::string>& class_names,
                                         const FoldPlan& plan, const PipelineConfig& config,
                                         int jobs) {
  if (features.empty()) fail(ErrorCode::EmptyDataset, "cross-validation needs samples");
  if (features.size() != labels.size() || plan.assignment.size() != labels.size()) {
    fail(ErrorCode::InvalidArgument, "features, labels and fold plan disagree in length");
  }
  const std::size_t k = class_names.size();
  for (int label : labels) {
    if (label < 0 || static_cast<std::size_t>(label) >= k) {
      fail(ErrorCode::InvalidArgument, "label outside class list");
    }
  }

  struct FoldResult {
    std::vector<std::size_t> test;
    std::vector<int> predicted;
  };
  std::vector<FoldResult> results(static_cast<std::size_t>(plan.folds));

  detail::parallel_for(results.size(), jobs, [&](std::size_t f) {
    std::vector<FeatureVector> train;
    std::vector<int> train_labels;
    auto& result = results[f];
    for (std::size_t i = 0; i < features.size(); ++i) {
      if (static_cast<std::size_t>(plan.assignment[i]) == f) {
        result.test.push_back(i);
      } else {
        train.push_back(features[i]);
        train_labels.push_back(labels[i]);
      }
    }
    if (result.test.empty()) return;
    try {
      const auto model = train_ovo_svm(train, train_labels, config.svm, class_names, 1);
      for (std::size_t i : result.test) result.predicted.push_back(model.predict(features[i]));
    } catch (const Error& e) {
      fail(e.code(), "fold " + std::to_string(f) + ": " + e.what());
    }
  });

  EvaluationReport report;
  report.config = config;
  report.config.folds = plan.folds;
  report.class_names = class_names;
  report.fold_sizes = plan.fold_sizes();
  report.confusion.assign(k, std::vector<std::size_t>(k, 0));
  for (const auto& result : results) {
    std::size_t hits = 0;
    for (std::size_t t = 0; t < result.test.size(); ++t) {
      const auto truth = static_cast<std::size_t>(labels[result.test[t]]);
      const auto pred = static_cast<std::size_t>(result.predicted[t]);
      ++report.confusion[truth][pred];
      if (truth == pred) ++hits;
    }
    report.per_fold_accuracy.push_back(
        result.test.empty() ? 0.0
                            : static_cast<double>(hits) / static_cast<double>(result.test.size()));
  }
  report.mean_accuracy =
      static_cast<double>(report.correct()) / static_cast<double>(report.total());
  return report;
}

EvaluationReport cross_validate(const Dataset& dataset, const PipelineConfig& config, int jobs) {
  if (dataset.samples.empty()) fail(ErrorCode::EmptyDataset, "dataset has no samples");
  const FoldPlan plan =
      config.subject_independent
          ? subject_folds(dataset, config.folds, config.seed)
          : stratified_folds(dataset.labels(), static_cast<int>(dataset.class_names.size()),
                             config.folds, config.seed);
  const auto features = extract_features(dataset, config.method, config.grid, config.norm, jobs);
  return cross_validate_features(features, dataset.labels(), dataset.class_names, plan, config,
                                 jobs);
}

}  // namespace dirpat
