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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dirpat/classifier.hpp"
#include "dirpat/features.hpp"

namespace dirpat {

struct Sample {
  std::filesystem::path path;
  int label = 0;  // index into Dataset::class_names
  std::optional<std::string> subject;
};

struct Dataset {
  std::vector<Sample> samples;
  std::vector<std::string> class_names;

  std::vector<int> labels() const;
};

// CSV with header `path,label[,subject]`. Relative image paths resolve
// against the manifest's directory; class order is first appearance.
Dataset load_manifest(const std::filesystem::path& path);
void write_manifest(const Dataset& dataset, const std::filesystem::path& path);

struct FoldPlan {
  int folds = 0;
  std::vector<int> assignment;  // fold index per sample

  std::vector<std::size_t> fold_sizes() const;
};

// Shuffles each class with the seeded generator and deals it round-robin.
// Dealing continues where the previous class stopped, so every fold is
// non-empty whenever there are at least `folds` samples.
FoldPlan stratified_folds(std::span<const int> labels, int num_classes, int folds,
                          std::uint64_t seed);

// Shuffles distinct subjects and deals them round-robin so no subject spans
// two folds. Requires a subject on every sample.
FoldPlan subject_folds(const Dataset& dataset, int folds, std::uint64_t seed);

struct PipelineConfig {
  Method method = Method::Retrain;
  RegionGrid grid;
  Normalization norm = Normalization::Raw;
  SvmConfig svm;
  int folds = 10;
  std::uint64_t seed = 42;
  bool subject_independent = false;
};

struct EvaluationReport {
  PipelineConfig config;
  std::string source;
  std::vector<std::string> class_names;
  std::vector<std::size_t> fold_sizes;
  std::vector<double> per_fold_accuracy;
  double mean_accuracy = 0.0;
  std::vector<std::vector<std::size_t>> confusion;  // [true][predicted]

  std::size_t total() const;
  std::size_t correct() const;
};

// Loads and encodes every sample on `jobs` workers, preserving input order.
std::vector<FeatureVector> extract_features(const Dataset& dataset, Method method,
                                            const RegionGrid& grid, Normalization norm,
                                            int jobs = 1);

// Held-out evaluation over precomputed features. Standardization and training
// see only the training folds. Folds run on `jobs` workers; the report does
// not depend on `jobs`.
EvaluationReport cross_validate_features(std::span<const FeatureVector> features,
                                         std::span<const int> labels,
                                         const std::vector<std::string>& class_names,
                                         const FoldPlan& plan, const PipelineConfig& config,
                                         int jobs = 1);

EvaluationReport cross_validate(const Dataset& dataset, const PipelineConfig& config,
                                int jobs = 1);

// Shown alongside every report.
extern const char* const kProtocolCaveat;

std::string report_to_json(const EvaluationReport& report);
std::string report_to_text(const EvaluationReport& report);
std::string confusion_to_csv(const EvaluationReport& report);

struct SynthConfig {
  int classes = 4;
  int per_class = 50;
  int size = 64;
  std::uint64_t seed = 42;
};

inline constexpr double kSynthPeriod = 8.0;
inline constexpr double kSynthAmplitude = 80.0;
inline constexpr double kSynthNoiseSigma = 8.0;

// Oriented sinusoidal gratings, orientation = class * 180 / classes degrees,
// random phase and additive Gaussian noise per sample.
GrayImage synth_grating(int size, double orientation_rad, double phase, double noise_sigma,
                        std::uint64_t noise_seed);

// Writes class_<k>/sample_<n>.pgm and manifest.csv under `out_dir`.
Dataset synth_dataset(const SynthConfig& config, const std::filesystem::path& out_dir);

}  // namespace dirpat
