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
#include <cmath>
#include <numeric>
#include <string>

#include "dirpat/classifier.hpp"
#include "dirpat/detail/parallel.hpp"
#include "dirpat/detail/rng.hpp"
#include "dirpat/error.hpp"

namespace dirpat {

namespace {

constexpr double kMinVariance = 1e-12;

// Rows of standardized training data; column d holds the constant bias input.
struct DesignMatrix {
  std::size_t rows = 0;
  std::size_t dim = 0;  // feature dimension without the bias column
  std::vector<double> data;

  const double* row(std::size_t i) const { return data.data() + i * (dim + 1); }
};

LinearModel train_pair(const DesignMatrix& x, std::span<const std::size_t> members,
                       std::span<const double> targets, int label_a, int label_b,
                       const SvmConfig& config, std::uint64_t seed) {
  const std::size_t n = members.size();
  const std::size_t width = x.dim + 1;
  const double lambda = 1.0 / (config.c * static_cast<double>(n));

  // w = scale * v keeps the per-step shrink O(1).
  std::vector<double> v(width, 0.0);
  double scale = 1.0;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  detail::Rng rng(seed);

  std::uint64_t t = 0;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(std::span<std::size_t>(order));
    for (std::size_t pick : order) {
      ++t;
      const double* xi = x.row(members[pick]);
      const double yi = targets[pick];
      double dot = 0.0;
      for (std::size_t j = 0; j < width; ++j) dot += v[j] * xi[j];
      const double margin = yi * scale * dot;
      const double eta = 1.0 / (lambda * static_cast<double>(t));

      if (t == 1) {
        std::fill(v.begin(), v.end(), 0.0);
        scale = 1.0;
      } else {
        scale *= 1.0 - 1.0 / static_cast<double>(t);
      }
      if (margin < 1.0) {
        const double step = eta * yi / scale;
        for (std::size_t j = 0; j < width; ++j) v[j] += step * xi[j];
      }
      if (scale < 1e-9) {
        for (auto& vj : v) vj *= scale;
        scale = 1.0;
      }
    }
  }

  LinearModel model;
  model.label_a = label_a;
  model.label_b = label_b;
  model.weights.resize(x.dim);
  for (std::size_t j = 0; j < x.dim; ++j) model.weights[j] = scale * v[j];
  model.bias = scale * v[x.dim];
  return model;
}

}  // namespace

Standardizer Standardizer::fit(std::span<const FeatureVector> samples) {
  Standardizer s;
  if (samples.empty()) return s;
  const std::size_t d = samples.front().values.size();
  s.mean.assign(d, 0.0);
  s.inv_std.assign(d, 0.0);
  for (const auto& fv : samples) {
    for (std::size_t j = 0; j < d; ++j) s.mean[j] += fv.values[j];
  }
  const double n = static_cast<double>(samples.size());
  for (auto& m : s.mean) m /= n;
  std::vector<double> var(d, 0.0);
  for (const auto& fv : samples) {
    for (std::size_t j = 0; j < d; ++j) {
      const double diff = fv.values[j] - s.mean[j];
      var[j] += diff * diff;
    }
  }
  // Constant dimensions map to 0.
  for (std::size_t j = 0; j < d; ++j) {
    const double v = var[j] / n;
    s.inv_std[j] = v > kMinVariance ? 1.0 / std::sqrt(v) : 0.0;
  }
  return s;
}

void Standardizer::apply(std::span<const double> in, std::span<double> out) const {
  for (std::size_t j = 0; j < in.size(); ++j) out[j] = (in[j] - mean[j]) * inv_std[j];
}

double LinearModel::decision(std::span<const double> x) const noexcept {
  double acc = bias;
  for (std::size_t j = 0; j < weights.size(); ++j) acc += weights[j] * x[j];
  return acc;
}

OvoSvmModel::OvoSvmModel(std::vector<int> classes, std::vector<std::string> class_names,
                         SvmConfig config, FeatureMeta meta, Standardizer standardizer,
                         std::vector<LinearModel> models)
    : classes_(std::move(classes)),
      class_names_(std::move(class_names)),
      config_(config),
      meta_(meta),
      standardizer_(std::move(standardizer)),
      models_(std::move(models)) {
  if (classes_.size() < 2 || !std::is_sorted(classes_.begin(), classes_.end()) ||
      std::adjacent_find(classes_.begin(), classes_.end()) != classes_.end()) {
    fail(ErrorCode::InvalidArgument, "model classes must be distinct, ascending, at least two");
  }
  const std::size_t d = meta_.length();
  if (standardizer_.mean.size() != d || standardizer_.inv_std.size() != d) {
    fail(ErrorCode::InvalidArgument, "standardizer length does not match feature layout");
  }
  for (const auto& m : models_) {
    if (m.weights.size() != d || m.label_a >= m.label_b ||
        !std::binary_search(classes_.begin(), classes_.end(), m.label_a) ||
        !std::binary_search(classes_.begin(), classes_.end(), m.label_b)) {
      fail(ErrorCode::InvalidArgument, "pairwise model inconsistent with class list or layout");
    }
  }
}

std::vector<int> OvoSvmModel::votes(const FeatureVector& feature) const {
  if (!(feature.meta == meta_) || feature.values.size() != meta_.length()) {
    fail(ErrorCode::InconsistentFeatureMeta,
         "feature (" + std::string(to_string(feature.meta.method)) + ", " +
             to_string(feature.meta.grid) + ", " + std::string(to_string(feature.meta.norm)) +
             ") does not match model (" + std::string(to_string(meta_.method)) + ", " +
             to_string(meta_.grid) + ", " + std::string(to_string(meta_.norm)) + ")");
  }
  std::vector<double> x(feature.values.size());
  standardizer_.apply(feature.values, x);

  auto position = [this](int label) {
    return static_cast<std::size_t>(
        std::lower_bound(classes_.begin(), classes_.end(), label) - classes_.begin());
  };
  std::vector<int> tally(classes_.size(), 0);
  for (const auto& m : models_) {
    const int winner = m.decision(x) > 0.0 ? m.label_b : m.label_a;
    ++tally[position(winner)];
  }
  return tally;
}

int OvoSvmModel::predict(const FeatureVector& feature) const {
  const auto tally = votes(feature);
  // max_element returns the first maximum: lowest label wins vote ties.
  const auto best = std::max_element(tally.begin(), tally.end()) - tally.begin();
  return classes_[static_cast<std::size_t>(best)];
}

std::string OvoSvmModel::name_of(int label) const {
  if (label >= 0 && static_cast<std::size_t>(label) < class_names_.size()) {
    return class_names_[static_cast<std::size_t>(label)];
  }
  return std::to_string(label);
}

OvoSvmModel train_ovo_svm(std::span<const FeatureVector> features, std::span<const int> labels,
                          const SvmConfig& config, std::vector<std::string> class_names,
                          int jobs) {
  if (features.empty()) fail(ErrorCode::EmptyDataset, "no training samples");
  if (features.size() != labels.size()) {
    fail(ErrorCode::InvalidArgument, "feature and label counts differ");
  }
  if (!(config.c > 0.0) || config.epochs < 1) {
    fail(ErrorCode::InvalidArgument, "SVM needs C > 0 and at least one epoch");
  }
  const FeatureMeta meta = features.front().meta;
  for (std::size_t i = 0; i < features.size(); ++i) {
    if (!(features[i].meta == meta) || features[i].values.size() != meta.length()) {
      fail(ErrorCode::InconsistentFeatureMeta,
           "training sample " + std::to_string(i) + " has a different feature layout");
    }
  }

  std::vector<int> classes(labels.begin(), labels.end());
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  if (classes.size() < 2) fail(ErrorCode::SingleClass, "training data holds a single class");

  Standardizer standardizer = Standardizer::fit(features);
  DesignMatrix x;
  x.rows = features.size();
  x.dim = meta.length();
  x.data.resize(x.rows * (x.dim + 1));
  for (std::size_t i = 0; i < x.rows; ++i) {
    double* row = x.data.data() + i * (x.dim + 1);
    standardizer.apply(features[i].values, std::span<double>(row, x.dim));
    row[x.dim] = 1.0;
  }

  struct Pair {
    int a;
    int b;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) pairs.push_back({classes[i], classes[j]});
  }

  std::vector<LinearModel> models(pairs.size());
  detail::parallel_for(pairs.size(), jobs, [&](std::size_t p) {
    std::vector<std::size_t> members;
    std::vector<double> targets;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == pairs[p].a || labels[i] == pairs[p].b) {
        members.push_back(i);
        targets.push_back(labels[i] == pairs[p].b ? 1.0 : -1.0);
      }
    }
    models[p] = train_pair(x, members, targets, pairs[p].a, pairs[p].b, config,
                           config.seed + static_cast<std::uint64_t>(p));
  });

  return OvoSvmModel(std::move(classes), std::move(class_names), config, meta,
                     std::move(standardizer), std::move(models));
}

}  // namespace dirpat
