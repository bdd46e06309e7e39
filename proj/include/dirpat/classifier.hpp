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

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "dirpat/features.hpp"

namespace dirpat {

struct SvmConfig {
  double c = 1.0;
  int epochs = 100;
  std::uint64_t seed = 42;

  friend bool operator==(const SvmConfig&, const SvmConfig&) = default;
};

// Per-dimension z-scoring fitted on training data only.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> inv_std;

  static Standardizer fit(std::span<const FeatureVector> samples);
  void apply(std::span<const double> in, std::span<double> out) const;

  friend bool operator==(const Standardizer&, const Standardizer&) = default;
};

// Decision w . x + b > 0 votes label_b, otherwise label_a.
struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;
  int label_a = 0;
  int label_b = 1;

  double decision(std::span<const double> x) const noexcept;

  friend bool operator==(const LinearModel&, const LinearModel&) = default;
};

class OvoSvmModel {
 public:
  OvoSvmModel() = default;
  OvoSvmModel(std::vector<int> classes, std::vector<std::string> class_names, SvmConfig config,
              FeatureMeta meta, Standardizer standardizer, std::vector<LinearModel> models);

  const std::vector<int>& classes() const noexcept { return classes_; }
  const std::vector<std::string>& class_names() const noexcept { return class_names_; }
  const SvmConfig& config() const noexcept { return config_; }
  const FeatureMeta& meta() const noexcept { return meta_; }
  const Standardizer& standardizer() const noexcept { return standardizer_; }
  const std::vector<LinearModel>& models() const noexcept { return models_; }

  // Votes per entry of classes(); throws InconsistentFeatureMeta.
  std::vector<int> votes(const FeatureVector& feature) const;
  int predict(const FeatureVector& feature) const;

  // Display name for a class label; falls back to the number.
  std::string name_of(int label) const;

  friend bool operator==(const OvoSvmModel&, const OvoSvmModel&) = default;

 private:
  std::vector<int> classes_;
  std::vector<std::string> class_names_;
  SvmConfig config_;
  FeatureMeta meta_;
  Standardizer standardizer_;
  std::vector<LinearModel> models_;
};

// One soft-margin linear SVM per class pair, trained by primal stochastic
// subgradient descent with step 1 / (lambda t), lambda = 1 / (C n). Pair p is
// shuffled with seed + p, so the result does not depend on `jobs`.
// `class_names[label]` is stored when given.
OvoSvmModel train_ovo_svm(std::span<const FeatureVector> features, std::span<const int> labels,
                          const SvmConfig& config, std::vector<std::string> class_names = {},
                          int jobs = 1);

// Binary model file, "DPSVM001", little-endian.
std::vector<std::uint8_t> encode_model(const OvoSvmModel& model);
OvoSvmModel decode_model(std::span<const std::uint8_t> bytes);
void save_model(const OvoSvmModel& model, const std::filesystem::path& path);
OvoSvmModel load_model(const std::filesystem::path& path);

// Lossless JSON form for inspection.
std::string model_to_json(const OvoSvmModel& model);
OvoSvmModel model_from_json(const std::string& text);

inline constexpr double kChiSquareEpsilon = 1e-10;

double chi_square_distance(std::span<const double> a, std::span<const double> b) noexcept;

// Majority label among the k chi-square nearest training vectors. Distance
// ties go to the earlier training index, vote ties to the lowest label.
int knn_predict(std::span<const FeatureVector> train, std::span<const int> labels,
                const FeatureVector& query, int k);

}  // namespace dirpat
