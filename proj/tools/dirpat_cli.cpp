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

// dirpat command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dirpat/dirpat.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// Library failure: message already names the file and cause.
struct DataError {
  std::string message;
};

void check(dp_status status, const std::string& context) {
  if (status != DP_OK) {
    throw DataError{context + ": " + dp_status_name(status) + ": " + dp_last_error()};
  }
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using ImagePtr = std::unique_ptr<dp_image, Deleter<dp_image, dp_image_free>>;
using CodeMapPtr = std::unique_ptr<dp_codemap, Deleter<dp_codemap, dp_codemap_free>>;
using FeaturesPtr = std::unique_ptr<dp_features, Deleter<dp_features, dp_features_free>>;
using DatasetPtr = std::unique_ptr<dp_dataset, Deleter<dp_dataset, dp_dataset_free>>;
using ModelPtr = std::unique_ptr<dp_model, Deleter<dp_model, dp_model_free>>;
using ReportPtr = std::unique_ptr<dp_report, Deleter<dp_report, dp_report_free>>;
using StringPtr = std::unique_ptr<char, Deleter<char, dp_string_free>>;

std::string take_string(char* s) {
  StringPtr owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw DataError{"cannot write " + path};
}

// Flags shared by every command that builds descriptors.
struct DescriptorFlags {
  std::string method = "RETRAIN";
  std::string grid = "7x6";
  std::string norm = "RAW";
};

struct SvmFlags {
  double c = 1.0;
  int epochs = 100;
};

const CLI::Validator kMethodValidator(
    [](std::string& value) -> std::string {
      dp_method m;
      if (dp_method_parse(value.c_str(), &m) != DP_OK) {
        return "unknown method '" + value + "' (RETRAIN, LBP, CSLBP, LDP, LDN)";
      }
      return {};
    },
    "METHOD");

const CLI::Validator kGridValidator(
    [](std::string& value) -> std::string {
      int r, c;
      if (dp_grid_parse(value.c_str(), &r, &c) != DP_OK) return "grid must be ROWSxCOLS, e.g. 7x6";
      return {};
    },
    "ROWSxCOLS");

const CLI::Validator kNormValidator(
    [](std::string& value) -> std::string {
      dp_norm n;
      if (dp_norm_parse(value.c_str(), &n) != DP_OK) return "norm must be RAW or L1";
      return {};
    },
    "RAW|L1");

void add_descriptor_flags(CLI::App* cmd, DescriptorFlags& f, bool with_grid = true) {
  cmd->add_option("--method", f.method, "Descriptor: RETRAIN, LBP, CSLBP, LDP, LDN")
      ->check(kMethodValidator)
      ->capture_default_str();
  if (with_grid) {
    cmd->add_option("--grid", f.grid, "Region grid as ROWSxCOLS")
        ->check(kGridValidator)
        ->capture_default_str();
    cmd->add_option("--norm", f.norm, "Histogram normalization: RAW or L1")
        ->check(kNormValidator)
        ->capture_default_str();
  }
}

void add_svm_flags(CLI::App* cmd, SvmFlags& f) {
  cmd->add_option("--c", f.c, "SVM regularization C")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--epochs", f.epochs, "SVM training epochs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

dp_method method_of(const std::string& name) {
  dp_method m;
  check(dp_method_parse(name.c_str(), &m), "--method");
  return m;
}

dp_pipeline make_pipeline(const DescriptorFlags& d, const SvmFlags& s, int folds,
                          std::uint64_t seed, int jobs) {
  dp_pipeline p;
  dp_pipeline_defaults(&p);
  p.method = method_of(d.method);
  check(dp_grid_parse(d.grid.c_str(), &p.grid_rows, &p.grid_cols), "--grid");
  check(dp_norm_parse(d.norm.c_str(), &p.norm), "--norm");
  p.svm_c = s.c;
  p.svm_epochs = s.epochs;
  p.svm_seed = seed;
  p.folds = folds;
  p.seed = seed;
  p.jobs = jobs;
  return p;
}

DatasetPtr load_dataset(const std::string& manifest) {
  dp_dataset* ds = nullptr;
  check(dp_dataset_load(manifest.c_str(), &ds), manifest);
  return DatasetPtr(ds);
}

ImagePtr load_image(const std::string& path) {
  dp_image* img = nullptr;
  check(dp_image_load(path.c_str(), &img), path);
  return ImagePtr(img);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directional texture descriptors, region histograms and one-vs-one SVM evaluation"};
  app.require_subcommand(1);
  app.fallthrough(false);

  // masks
  auto* masks = app.add_subcommand("masks", "Print the eight compass masks");
  std::string masks_out;
  masks->add_option("--out", masks_out, "Write to a file instead of stdout");

  // encode
  auto* encode = app.add_subcommand("encode", "Encode one image into a per-pixel code map");
  DescriptorFlags encode_flags;
  std::string encode_in, encode_out, encode_pgm;
  encode->add_option("--in", encode_in, "Input PGM or PNG image")->required();
  add_descriptor_flags(encode, encode_flags, false);
  encode->add_option("--out", encode_out, "Binary code map output (DPCM0001)");
  encode->add_option("--out-pgm", encode_pgm, "Scaled PGM visualization output");

  // export-codemap
  auto* export_cmd = app.add_subcommand("export-codemap", "Convert a binary code map to PGM");
  std::string export_in, export_out;
  export_cmd->add_option("--in", export_in, "Binary code map")->required();
  export_cmd->add_option("--out", export_out, "Output PGM")->required();

  // features
  auto* features = app.add_subcommand(
      "features", "Region histogram features: CSV for a manifest, binary record for one image");
  DescriptorFlags feature_flags;
  std::string features_manifest, features_in, features_out;
  int features_jobs = 0;
  auto* fm = features->add_option("--manifest", features_manifest, "Manifest CSV (path,label[,subject])");
  auto* fi = features->add_option("--in", features_in, "Single image; writes a DPFV0001 record");
  fm->excludes(fi);
  features->add_option("--out", features_out, "Output file")->required();
  add_descriptor_flags(features, feature_flags);
  features->add_option("--jobs", features_jobs, "Worker threads (0 = all processors)")
      ->check(CLI::NonNegativeNumber);

  // train
  auto* train = app.add_subcommand("train", "Fit a one-vs-one linear SVM on a manifest");
  DescriptorFlags train_flags;
  SvmFlags train_svm;
  std::string train_manifest, train_out, train_json;
  std::uint64_t train_seed = 42;
  int train_jobs = 0;
  train->add_option("--manifest", train_manifest, "Manifest CSV")->required();
  train->add_option("--out", train_out, "Binary model output (DPSVM001)")->required();
  train->add_option("--json", train_json, "Also write the model as JSON");
  add_descriptor_flags(train, train_flags);
  add_svm_flags(train, train_svm);
  train->add_option("--seed", train_seed, "Training seed")->capture_default_str();
  train->add_option("--jobs", train_jobs, "Worker threads (0 = all processors)")
      ->check(CLI::NonNegativeNumber);

  // predict
  auto* predict = app.add_subcommand("predict", "Label images with a saved model");
  std::string predict_model, predict_manifest, predict_out;
  std::vector<std::string> predict_in;
  predict->add_option("--model", predict_model, "Binary model file")->required();
  auto* pi = predict->add_option("--in", predict_in, "Image(s) to label");
  auto* pm = predict->add_option("--manifest", predict_manifest, "Label every image of a manifest");
  pi->excludes(pm);
  predict->add_option("--out", predict_out, "Write path,label rows to a file instead of stdout");

  // crossval
  auto* crossval = app.add_subcommand("crossval", "Stratified N-fold cross-validation report");
  DescriptorFlags cv_flags;
  SvmFlags cv_svm;
  std::string cv_manifest, cv_out, cv_text, cv_confusion;
  int cv_folds = 10;
  std::uint64_t cv_seed = 42;
  int cv_jobs = 0;
  bool cv_subject = false;
  crossval->add_option("--manifest", cv_manifest, "Manifest CSV")->required();
  add_descriptor_flags(crossval, cv_flags);
  add_svm_flags(crossval, cv_svm);
  crossval->add_option("--folds", cv_folds, "Number of folds")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  crossval->add_option("--seed", cv_seed, "Fold and training seed")->capture_default_str();
  crossval->add_option("--jobs", cv_jobs, "Worker threads (0 = all processors)")
      ->check(CLI::NonNegativeNumber);
  crossval->add_flag("--subject-independent", cv_subject,
                     "Keep each subject inside one fold (needs a subject column)");
  crossval->add_option("--out", cv_out, "JSON report file (default: stdout)");
  crossval->add_option("--text", cv_text, "Aligned text report file");
  crossval->add_option("--confusion-csv", cv_confusion, "Confusion matrix as CSV");

  // synth
  auto* synth = app.add_subcommand("synth", "Generate an oriented-grating dataset with manifest");
  int synth_classes = 4, synth_per_class = 50, synth_size = 64;
  std::uint64_t synth_seed = 42;
  std::string synth_out;
  synth->add_option("--classes", synth_classes, "Number of orientations")
      ->check(CLI::Range(2, 8))
      ->capture_default_str();
  synth->add_option("--per-class", synth_per_class, "Images per class")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth->add_option("--size", synth_size, "Image side in pixels")
      ->check(CLI::Range(16, 4096))
      ->capture_default_str();
  synth->add_option("--seed", synth_seed, "Generator seed")->capture_default_str();
  synth->add_option("--out", synth_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n";
    const CLI::App* scope = &app;
    for (const auto* sub : app.get_subcommands()) scope = sub;
    std::cerr << scope->help();
    return kExitUsage;
  }

  try {
    if (*masks) {
      const std::string text = take_string([] {
        char* s = nullptr;
        check(dp_masks_text(&s), "masks");
        return s;
      }());
      if (masks_out.empty()) {
        std::cout << text;
      } else {
        write_text(masks_out, text);
      }
    } else if (*encode) {
      if (encode_out.empty() && encode_pgm.empty()) {
        std::cerr << "error: encode needs --out and/or --out-pgm\n\n" << encode->help();
        return kExitUsage;
      }
      const auto img = load_image(encode_in);
      dp_codemap* raw = nullptr;
      check(dp_encode(img.get(), method_of(encode_flags.method), &raw), encode_in);
      const CodeMapPtr codes(raw);
      if (!encode_out.empty()) check(dp_codemap_save(codes.get(), encode_out.c_str()), encode_out);
      if (!encode_pgm.empty()) check(dp_codemap_write_pgm(codes.get(), encode_pgm.c_str()), encode_pgm);
    } else if (*export_cmd) {
      dp_codemap* raw = nullptr;
      check(dp_codemap_load(export_in.c_str(), &raw), export_in);
      const CodeMapPtr codes(raw);
      check(dp_codemap_write_pgm(codes.get(), export_out.c_str()), export_out);
    } else if (*features) {
      const auto p = make_pipeline(feature_flags, SvmFlags{}, 10, 42, features_jobs);
      if (!features_manifest.empty()) {
        const auto ds = load_dataset(features_manifest);
        check(dp_dataset_write_features_csv(ds.get(), &p, features_out.c_str()), features_out);
      } else if (!features_in.empty()) {
        const auto img = load_image(features_in);
        dp_codemap* raw = nullptr;
        check(dp_encode(img.get(), p.method, &raw), features_in);
        const CodeMapPtr codes(raw);
        dp_features* fraw = nullptr;
        check(dp_features_extract(codes.get(), p.grid_rows, p.grid_cols, p.norm, &fraw), features_in);
        const FeaturesPtr fv(fraw);
        check(dp_features_write_record(fv.get(), features_out.c_str()), features_out);
      } else {
        std::cerr << "error: features needs --manifest or --in\n\n" << features->help();
        return kExitUsage;
      }
    } else if (*train) {
      const auto p = make_pipeline(train_flags, train_svm, 10, train_seed, train_jobs);
      const auto ds = load_dataset(train_manifest);
      dp_model* raw = nullptr;
      check(dp_model_train(ds.get(), &p, &raw), train_manifest);
      const ModelPtr model(raw);
      check(dp_model_save(model.get(), train_out.c_str()), train_out);
      if (!train_json.empty()) {
        char* s = nullptr;
        check(dp_model_to_json(model.get(), &s), train_json);
        write_text(train_json, take_string(s));
      }
    } else if (*predict) {
      dp_model* raw = nullptr;
      check(dp_model_load(predict_model.c_str(), &raw), predict_model);
      const ModelPtr model(raw);
      std::vector<std::string> inputs = predict_in;
      if (!predict_manifest.empty()) {
        const auto ds = load_dataset(predict_manifest);
        for (std::size_t i = 0; i < dp_dataset_size(ds.get()); ++i) {
          inputs.emplace_back(dp_dataset_sample_path(ds.get(), i));
        }
      }
      if (inputs.empty()) {
        std::cerr << "error: predict needs --in or --manifest\n\n" << predict->help();
        return kExitUsage;
      }
      std::string rows = "path,label\n";
      for (const auto& path : inputs) {
        const auto img = load_image(path);
        int label = -1;
        check(dp_model_predict_image(model.get(), img.get(), &label), path);
        const char* name = dp_model_class_name(model.get(), label);
        rows += path + "," + (name ? std::string(name) : std::to_string(label)) + "\n";
      }
      if (predict_out.empty()) {
        std::cout << rows;
      } else {
        write_text(predict_out, rows);
      }
    } else if (*crossval) {
      auto p = make_pipeline(cv_flags, cv_svm, cv_folds, cv_seed, cv_jobs);
      p.subject_independent = cv_subject ? 1 : 0;
      const auto ds = load_dataset(cv_manifest);
      dp_report* raw = nullptr;
      check(dp_crossval(ds.get(), &p, cv_manifest.c_str(), &raw), cv_manifest);
      const ReportPtr report(raw);
      char* s = nullptr;
      check(dp_report_to_json(report.get(), &s), "report");
      const std::string json = take_string(s);
      check(dp_report_to_text(report.get(), &s), "report");
      const std::string text = take_string(s);
      if (cv_out.empty()) {
        std::cout << json;
      } else {
        write_text(cv_out, json);
        std::cout << text;
      }
      if (!cv_text.empty()) write_text(cv_text, text);
      if (!cv_confusion.empty()) {
        check(dp_report_confusion_csv(report.get(), &s), "report");
        write_text(cv_confusion, take_string(s));
      }
    } else if (*synth) {
      check(dp_dataset_synth(synth_classes, synth_per_class, synth_size, synth_seed,
                             synth_out.c_str(), nullptr),
            synth_out);
    }
  } catch (const DataError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitData;
  }
  return 0;
}
