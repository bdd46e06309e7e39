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

#include "dirpat/dirpat.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "dirpat/classifier.hpp"
#include "dirpat/compass.hpp"
#include "dirpat/encoders.hpp"
#include "dirpat/error.hpp"
#include "dirpat/evaluation.hpp"
#include "dirpat/features.hpp"
#include "dirpat/image.hpp"

struct dp_image {
  dirpat::GrayImage value;
};

struct dp_codemap {
  dirpat::CodeMap value;
};

struct dp_features {
  dirpat::FeatureVector value;
};

struct dp_dataset {
  dirpat::Dataset value;
  std::vector<std::string> paths;  // backing storage for dp_dataset_sample_path

  explicit dp_dataset(dirpat::Dataset ds) : value(std::move(ds)) {
    for (const auto& s : value.samples) paths.push_back(s.path.string());
  }
};

struct dp_model {
  dirpat::OvoSvmModel value;
};

struct dp_report {
  dirpat::EvaluationReport value;
};

namespace {

thread_local std::string g_last_error;

dp_status to_status(dirpat::ErrorCode code) {
  return static_cast<dp_status>(static_cast<int>(code) + 1);
}

template <class F>
dp_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return DP_OK;
  } catch (const dirpat::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DP_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DP_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return DP_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) dirpat::fail(dirpat::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dirpat::Method to_method(dp_method m) {
  if (m < DP_METHOD_RETRAIN || m > DP_METHOD_LDN) {
    dirpat::fail(dirpat::ErrorCode::UnknownMethod, "unknown method id " + std::to_string(m));
  }
  return static_cast<dirpat::Method>(m);
}

dirpat::Normalization to_norm(dp_norm n) {
  if (n != DP_NORM_RAW && n != DP_NORM_L1) {
    dirpat::fail(dirpat::ErrorCode::InvalidArgument, "unknown normalization id");
  }
  return static_cast<dirpat::Normalization>(n);
}

dirpat::PipelineConfig to_config(const dp_pipeline& p) {
  dirpat::PipelineConfig c;
  c.method = to_method(p.method);
  if (p.grid_rows < 1 || p.grid_cols < 1) {
    dirpat::fail(dirpat::ErrorCode::InvalidArgument, "grid counts must be positive");
  }
  c.grid = {p.grid_rows, p.grid_cols};
  c.norm = to_norm(p.norm);
  c.svm.c = p.svm_c;
  c.svm.epochs = p.svm_epochs;
  c.svm.seed = p.svm_seed;
  c.folds = p.folds;
  c.seed = p.seed;
  c.subject_independent = p.subject_independent != 0;
  return c;
}

}  // namespace

extern "C" {

const char* dp_last_error(void) { return g_last_error.c_str(); }

const char* dp_status_name(dp_status status) {
  switch (status) {
    case DP_OK: return "OK";
    case DP_ERR_OUT_OF_MEMORY: return "OutOfMemory";
    case DP_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status > DP_OK && status <= DP_ERR_INVALID_ARGUMENT) {
    return dirpat::to_string(static_cast<dirpat::ErrorCode>(status - 1)).data();
  }
  return "Unknown";
}

void dp_string_free(char* s) { std::free(s); }

void dp_pipeline_defaults(dp_pipeline* p) {
  if (!p) return;
  const dirpat::PipelineConfig c;
  p->method = static_cast<dp_method>(c.method);
  p->grid_rows = c.grid.rows;
  p->grid_cols = c.grid.cols;
  p->norm = static_cast<dp_norm>(c.norm);
  p->svm_c = c.svm.c;
  p->svm_epochs = c.svm.epochs;
  p->svm_seed = c.svm.seed;
  p->folds = c.folds;
  p->seed = c.seed;
  p->subject_independent = 0;
  p->jobs = 0;
}

dp_status dp_method_parse(const char* name, dp_method* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = static_cast<dp_method>(dirpat::parse_method(name));
  });
}

const char* dp_method_name(dp_method method) {
  if (method < DP_METHOD_RETRAIN || method > DP_METHOD_LDN) return "UNKNOWN";
  return dirpat::to_string(static_cast<dirpat::Method>(method)).data();
}

int dp_method_code_count(dp_method method) {
  if (method < DP_METHOD_RETRAIN || method > DP_METHOD_LDN) return 0;
  return dirpat::code_count(static_cast<dirpat::Method>(method));
}

dp_status dp_grid_parse(const char* text, int* rows, int* cols) {
  return guarded([&] {
    require(text, "text");
    require(rows, "rows");
    require(cols, "cols");
    const auto g = dirpat::parse_grid(text);
    *rows = g.rows;
    *cols = g.cols;
  });
}

dp_status dp_norm_parse(const char* text, dp_norm* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = static_cast<dp_norm>(dirpat::parse_normalization(text));
  });
}

dp_status dp_masks_text(char** out) {
  return guarded([&] {
    require(out, "out");
    *out = duplicate(dirpat::format_masks());
  });
}

dp_status dp_image_load(const char* path, dp_image** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new dp_image{dirpat::load_grayscale(path)};
  });
}

dp_status dp_image_from_pixels(int width, int height, const uint8_t* pixels, dp_image** out) {
  return guarded([&] {
    require(pixels, "pixels");
    require(out, "out");
    if (width < 1 || height < 1) {
      dirpat::fail(dirpat::ErrorCode::InvalidArgument, "image dimensions must be positive");
    }
    std::vector<std::uint8_t> buf(pixels, pixels + static_cast<std::size_t>(width) *
                                                       static_cast<std::size_t>(height));
    *out = new dp_image{dirpat::GrayImage(width, height, std::move(buf))};
  });
}

int dp_image_width(const dp_image* image) { return image ? image->value.width() : 0; }
int dp_image_height(const dp_image* image) { return image ? image->value.height() : 0; }
const uint8_t* dp_image_pixels(const dp_image* image) {
  return image ? image->value.pixels().data() : nullptr;
}

dp_status dp_image_write_pgm(const dp_image* image, const char* path) {
  return guarded([&] {
    require(image, "image");
    require(path, "path");
    dirpat::write_pgm(image->value, path);
  });
}

void dp_image_free(dp_image* image) { delete image; }

dp_status dp_encode(const dp_image* image, dp_method method, dp_codemap** out) {
  return guarded([&] {
    require(image, "image");
    require(out, "out");
    *out = new dp_codemap{dirpat::encode(image->value, to_method(method))};
  });
}

int dp_codemap_width(const dp_codemap* codes) { return codes ? codes->value.width() : 0; }
int dp_codemap_height(const dp_codemap* codes) { return codes ? codes->value.height() : 0; }
int dp_codemap_code_count(const dp_codemap* codes) { return codes ? codes->value.code_count() : 0; }
dp_method dp_codemap_method(const dp_codemap* codes) {
  return codes ? static_cast<dp_method>(codes->value.method()) : DP_METHOD_RETRAIN;
}
const uint8_t* dp_codemap_codes(const dp_codemap* codes) {
  return codes ? codes->value.codes().data() : nullptr;
}

dp_status dp_codemap_save(const dp_codemap* codes, const char* path) {
  return guarded([&] {
    require(codes, "codes");
    require(path, "path");
    dirpat::write_codemap(codes->value, path);
  });
}

dp_status dp_codemap_load(const char* path, dp_codemap** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new dp_codemap{dirpat::read_codemap(path)};
  });
}

dp_status dp_codemap_write_pgm(const dp_codemap* codes, const char* path) {
  return guarded([&] {
    require(codes, "codes");
    require(path, "path");
    dirpat::write_pgm(dirpat::codemap_to_gray(codes->value), path);
  });
}

void dp_codemap_free(dp_codemap* codes) { delete codes; }

dp_status dp_features_extract(const dp_codemap* codes, int grid_rows, int grid_cols, dp_norm norm,
                              dp_features** out) {
  return guarded([&] {
    require(codes, "codes");
    require(out, "out");
    *out = new dp_features{
        dirpat::region_histograms(codes->value, {grid_rows, grid_cols}, to_norm(norm))};
  });
}

size_t dp_features_length(const dp_features* features) {
  return features ? features->value.values.size() : 0;
}

const double* dp_features_values(const dp_features* features) {
  return features ? features->value.values.data() : nullptr;
}

dp_status dp_features_write_record(const dp_features* features, const char* path) {
  return guarded([&] {
    require(features, "features");
    require(path, "path");
    dirpat::write_feature_record(features->value, path);
  });
}

void dp_features_free(dp_features* features) { delete features; }

dp_status dp_dataset_load(const char* manifest_path, dp_dataset** out) {
  return guarded([&] {
    require(manifest_path, "manifest_path");
    require(out, "out");
    *out = new dp_dataset(dirpat::load_manifest(manifest_path));
  });
}

dp_status dp_dataset_synth(int classes, int per_class, int size, uint64_t seed,
                           const char* out_dir, dp_dataset** out) {
  return guarded([&] {
    require(out_dir, "out_dir");
    dirpat::SynthConfig cfg{classes, per_class, size, seed};
    auto ds = dirpat::synth_dataset(cfg, out_dir);
    if (out) *out = new dp_dataset(std::move(ds));
  });
}

size_t dp_dataset_size(const dp_dataset* dataset) {
  return dataset ? dataset->value.samples.size() : 0;
}

size_t dp_dataset_class_count(const dp_dataset* dataset) {
  return dataset ? dataset->value.class_names.size() : 0;
}

const char* dp_dataset_class_name(const dp_dataset* dataset, size_t class_index) {
  if (!dataset || class_index >= dataset->value.class_names.size()) return nullptr;
  return dataset->value.class_names[class_index].c_str();
}

const char* dp_dataset_sample_path(const dp_dataset* dataset, size_t index) {
  if (!dataset || index >= dataset->paths.size()) return nullptr;
  return dataset->paths[index].c_str();
}

int dp_dataset_sample_label(const dp_dataset* dataset, size_t index) {
  if (!dataset || index >= dataset->value.samples.size()) return -1;
  return dataset->value.samples[index].label;
}

dp_status dp_dataset_write_features_csv(const dp_dataset* dataset, const dp_pipeline* pipeline,
                                        const char* path) {
  return guarded([&] {
    require(dataset, "dataset");
    require(pipeline, "pipeline");
    require(path, "path");
    const auto cfg = to_config(*pipeline);
    const auto& ds = dataset->value;
    const auto features = dirpat::extract_features(ds, cfg.method, cfg.grid, cfg.norm, pipeline->jobs);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) dirpat::fail(dirpat::ErrorCode::IoError, std::string("cannot write ") + path);
    dirpat::write_feature_csv_header(out, features.empty() ? 0 : features.front().values.size());
    for (std::size_t i = 0; i < features.size(); ++i) {
      dirpat::write_feature_csv_row(out, dataset->paths[i],
                                    ds.class_names[static_cast<std::size_t>(ds.samples[i].label)],
                                    features[i]);
    }
    if (!out) dirpat::fail(dirpat::ErrorCode::IoError, std::string("short write to ") + path);
  });
}

void dp_dataset_free(dp_dataset* dataset) { delete dataset; }

dp_status dp_model_train(const dp_dataset* dataset, const dp_pipeline* pipeline, dp_model** out) {
  return guarded([&] {
    require(dataset, "dataset");
    require(pipeline, "pipeline");
    require(out, "out");
    const auto cfg = to_config(*pipeline);
    const auto& ds = dataset->value;
    const auto features = dirpat::extract_features(ds, cfg.method, cfg.grid, cfg.norm, pipeline->jobs);
    const auto labels = ds.labels();
    *out = new dp_model{
        dirpat::train_ovo_svm(features, labels, cfg.svm, ds.class_names, pipeline->jobs)};
  });
}

dp_status dp_model_save(const dp_model* model, const char* path) {
  return guarded([&] {
    require(model, "model");
    require(path, "path");
    dirpat::save_model(model->value, path);
  });
}

dp_status dp_model_load(const char* path, dp_model** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new dp_model{dirpat::load_model(path)};
  });
}

dp_status dp_model_to_json(const dp_model* model, char** out) {
  return guarded([&] {
    require(model, "model");
    require(out, "out");
    *out = duplicate(dirpat::model_to_json(model->value));
  });
}

dp_status dp_model_predict_image(const dp_model* model, const dp_image* image, int* label) {
  return guarded([&] {
    require(model, "model");
    require(image, "image");
    require(label, "label");
    const auto& meta = model->value.meta();
    const auto fv = dirpat::region_histograms(dirpat::encode(image->value, meta.method), meta.grid,
                                              meta.norm);
    *label = model->value.predict(fv);
  });
}

dp_status dp_model_predict_features(const dp_model* model, const dp_features* features,
                                    int* label) {
  return guarded([&] {
    require(model, "model");
    require(features, "features");
    require(label, "label");
    *label = model->value.predict(features->value);
  });
}

size_t dp_model_class_count(const dp_model* model) {
  return model ? model->value.classes().size() : 0;
}

const char* dp_model_class_name(const dp_model* model, int label) {
  if (!model || label < 0 || static_cast<std::size_t>(label) >= model->value.class_names().size()) {
    return nullptr;
  }
  return model->value.class_names()[static_cast<std::size_t>(label)].c_str();
}

void dp_model_free(dp_model* model) { delete model; }

dp_status dp_crossval(const dp_dataset* dataset, const dp_pipeline* pipeline, const char* source,
                      dp_report** out) {
  return guarded([&] {
    require(dataset, "dataset");
    require(pipeline, "pipeline");
    require(out, "out");
    auto report = dirpat::cross_validate(dataset->value, to_config(*pipeline), pipeline->jobs);
    if (source) report.source = source;
    *out = new dp_report{std::move(report)};
  });
}

double dp_report_mean_accuracy(const dp_report* report) {
  return report ? report->value.mean_accuracy : 0.0;
}

size_t dp_report_fold_count(const dp_report* report) {
  return report ? report->value.per_fold_accuracy.size() : 0;
}

double dp_report_fold_accuracy(const dp_report* report, size_t fold) {
  if (!report || fold >= report->value.per_fold_accuracy.size()) return 0.0;
  return report->value.per_fold_accuracy[fold];
}

dp_status dp_report_to_json(const dp_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = duplicate(dirpat::report_to_json(report->value));
  });
}

dp_status dp_report_to_text(const dp_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = duplicate(dirpat::report_to_text(report->value));
  });
}

dp_status dp_report_confusion_csv(const dp_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = duplicate(dirpat::confusion_to_csv(report->value));
  });
}

void dp_report_free(dp_report* report) { delete report; }

}  // extern "C"
