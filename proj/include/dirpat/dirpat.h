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

/*
 * dirpat C API.
 *
 * All objects are opaque handles created by the library and released with
 * the matching *_free function. Every fallible call returns a dp_status;
 * on failure dp_last_error() describes the cause for the calling thread.
 * Strings returned through char** outputs are owned by the caller and must
 * be released with dp_string_free().
 */
#ifndef DIRPAT_DIRPAT_H
#define DIRPAT_DIRPAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) && defined(DIRPAT_BUILDING_LIBRARY)
#define DIRPAT_API __declspec(dllexport)
#elif defined(_WIN32)
#define DIRPAT_API __declspec(dllimport)
#else
#define DIRPAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dp_status {
  DP_OK = 0,
  DP_ERR_FILE_NOT_FOUND = 1,
  DP_ERR_UNSUPPORTED_FORMAT = 2,
  DP_ERR_CORRUPT_IMAGE = 3,
  DP_ERR_IMAGE_TOO_SMALL = 4,
  DP_ERR_OUT_OF_BOUNDS = 5,
  DP_ERR_UNKNOWN_METHOD = 6,
  DP_ERR_GRID_TOO_FINE = 7,
  DP_ERR_SINGLE_CLASS = 8,
  DP_ERR_EMPTY_DATASET = 9,
  DP_ERR_INCONSISTENT_FEATURE_META = 10,
  DP_ERR_K_TOO_LARGE = 11,
  DP_ERR_MISSING_FILE = 12,
  DP_ERR_MALFORMED_ROW = 13,
  DP_ERR_UNRESOLVABLE_PATH = 14,
  DP_ERR_TOO_FEW_SAMPLES = 15,
  DP_ERR_IO = 16,
  DP_ERR_INVALID_ARGUMENT = 17,
  DP_ERR_OUT_OF_MEMORY = 18,
  DP_ERR_INTERNAL = 19
} dp_status;

typedef enum dp_method {
  DP_METHOD_RETRAIN = 0,
  DP_METHOD_LBP = 1,
  DP_METHOD_CSLBP = 2,
  DP_METHOD_LDP = 3,
  DP_METHOD_LDN = 4
} dp_method;

typedef enum dp_norm { DP_NORM_RAW = 0, DP_NORM_L1 = 1 } dp_norm;

typedef struct dp_image dp_image;
typedef struct dp_codemap dp_codemap;
typedef struct dp_features dp_features;
typedef struct dp_dataset dp_dataset;
typedef struct dp_model dp_model;
typedef struct dp_report dp_report;

/* Full pipeline configuration. dp_pipeline_defaults() fills the documented
 * defaults: RETRAIN, 7x6 grid, RAW, C = 1, 100 epochs, 10 folds, seed 42. */
typedef struct dp_pipeline {
  dp_method method;
  int grid_rows;
  int grid_cols;
  dp_norm norm;
  double svm_c;
  int svm_epochs;
  uint64_t svm_seed;
  int folds;
  uint64_t seed;
  int subject_independent;
  int jobs; /* <= 0: one worker per hardware thread */
} dp_pipeline;

/* ---- errors and small helpers ---- */

DIRPAT_API const char* dp_last_error(void);
DIRPAT_API const char* dp_status_name(dp_status status);
DIRPAT_API void dp_string_free(char* s);

DIRPAT_API void dp_pipeline_defaults(dp_pipeline* pipeline);
DIRPAT_API dp_status dp_method_parse(const char* name, dp_method* out);
DIRPAT_API const char* dp_method_name(dp_method method);
DIRPAT_API int dp_method_code_count(dp_method method);
DIRPAT_API dp_status dp_grid_parse(const char* text, int* rows, int* cols);
DIRPAT_API dp_status dp_norm_parse(const char* text, dp_norm* out);

/* Eight compass masks as text, one row per line, blank line between masks. */
DIRPAT_API dp_status dp_masks_text(char** out);

/* ---- images ---- */

DIRPAT_API dp_status dp_image_load(const char* path, dp_image** out);
DIRPAT_API dp_status dp_image_from_pixels(int width, int height, const uint8_t* pixels,
                                          dp_image** out);
DIRPAT_API int dp_image_width(const dp_image* image);
DIRPAT_API int dp_image_height(const dp_image* image);
DIRPAT_API const uint8_t* dp_image_pixels(const dp_image* image);
DIRPAT_API dp_status dp_image_write_pgm(const dp_image* image, const char* path);
DIRPAT_API void dp_image_free(dp_image* image);

/* ---- code maps ---- */

DIRPAT_API dp_status dp_encode(const dp_image* image, dp_method method, dp_codemap** out);
DIRPAT_API int dp_codemap_width(const dp_codemap* codes);
DIRPAT_API int dp_codemap_height(const dp_codemap* codes);
DIRPAT_API int dp_codemap_code_count(const dp_codemap* codes);
DIRPAT_API dp_method dp_codemap_method(const dp_codemap* codes);
DIRPAT_API const uint8_t* dp_codemap_codes(const dp_codemap* codes);
DIRPAT_API dp_status dp_codemap_save(const dp_codemap* codes, const char* path);
DIRPAT_API dp_status dp_codemap_load(const char* path, dp_codemap** out);
/* Codes scaled by floor(255 / (code_count - 1)), written as binary PGM. */
DIRPAT_API dp_status dp_codemap_write_pgm(const dp_codemap* codes, const char* path);
DIRPAT_API void dp_codemap_free(dp_codemap* codes);

/* ---- feature vectors ---- */

DIRPAT_API dp_status dp_features_extract(const dp_codemap* codes, int grid_rows, int grid_cols,
                                         dp_norm norm, dp_features** out);
DIRPAT_API size_t dp_features_length(const dp_features* features);
DIRPAT_API const double* dp_features_values(const dp_features* features);
DIRPAT_API dp_status dp_features_write_record(const dp_features* features, const char* path);
DIRPAT_API void dp_features_free(dp_features* features);

/* ---- datasets ---- */

DIRPAT_API dp_status dp_dataset_load(const char* manifest_path, dp_dataset** out);
/* Generates oriented gratings plus manifest.csv under out_dir. */
DIRPAT_API dp_status dp_dataset_synth(int classes, int per_class, int size, uint64_t seed,
                                      const char* out_dir, dp_dataset** out);
DIRPAT_API size_t dp_dataset_size(const dp_dataset* dataset);
DIRPAT_API size_t dp_dataset_class_count(const dp_dataset* dataset);
DIRPAT_API const char* dp_dataset_class_name(const dp_dataset* dataset, size_t class_index);
DIRPAT_API const char* dp_dataset_sample_path(const dp_dataset* dataset, size_t index);
DIRPAT_API int dp_dataset_sample_label(const dp_dataset* dataset, size_t index);
/* One CSV row per sample: id,label,method,grid,norm,values... */
DIRPAT_API dp_status dp_dataset_write_features_csv(const dp_dataset* dataset,
                                                   const dp_pipeline* pipeline,
                                                   const char* path);
DIRPAT_API void dp_dataset_free(dp_dataset* dataset);

/* ---- one-vs-one linear SVM ---- */

DIRPAT_API dp_status dp_model_train(const dp_dataset* dataset, const dp_pipeline* pipeline,
                                    dp_model** out);
DIRPAT_API dp_status dp_model_save(const dp_model* model, const char* path);
DIRPAT_API dp_status dp_model_load(const char* path, dp_model** out);
DIRPAT_API dp_status dp_model_to_json(const dp_model* model, char** out);
/* Encodes the image with the model's descriptor settings, then votes. */
DIRPAT_API dp_status dp_model_predict_image(const dp_model* model, const dp_image* image,
                                            int* label);
DIRPAT_API dp_status dp_model_predict_features(const dp_model* model,
                                               const dp_features* features, int* label);
DIRPAT_API size_t dp_model_class_count(const dp_model* model);
DIRPAT_API const char* dp_model_class_name(const dp_model* model, int label);
DIRPAT_API void dp_model_free(dp_model* model);

/* ---- N-fold cross-validation ---- */

DIRPAT_API dp_status dp_crossval(const dp_dataset* dataset, const dp_pipeline* pipeline,
                                 const char* source, dp_report** out);
DIRPAT_API double dp_report_mean_accuracy(const dp_report* report);
DIRPAT_API size_t dp_report_fold_count(const dp_report* report);
DIRPAT_API double dp_report_fold_accuracy(const dp_report* report, size_t fold);
DIRPAT_API dp_status dp_report_to_json(const dp_report* report, char** out);
DIRPAT_API dp_status dp_report_to_text(const dp_report* report, char** out);
DIRPAT_API dp_status dp_report_confusion_csv(const dp_report* report, char** out);
DIRPAT_API void dp_report_free(dp_report* report);

#ifdef __cplusplus
}
#endif

#endif /* DIRPAT_DIRPAT_H */
