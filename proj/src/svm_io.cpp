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

#include <string>

#include "dirpat/classifier.hpp"
#include "dirpat/detail/binary_io.hpp"
#include "dirpat/error.hpp"

namespace dirpat {

namespace {

constexpr std::string_view kModelMagic = "DPSVM001";

FeatureMeta make_meta(std::uint32_t method, std::uint32_t rows, std::uint32_t cols,
                      std::uint32_t norm, std::uint32_t count) {
  if (method > static_cast<std::uint32_t>(Method::Ldn) || norm > 1 || rows < 1 || cols < 1 ||
      rows > 65535 || cols > 65535 || count < 1 || count > 256) {
    fail(ErrorCode::IoError, "model file carries an invalid feature layout");
  }
  return {static_cast<Method>(method), {static_cast<int>(rows), static_cast<int>(cols)},
          static_cast<Normalization>(norm), static_cast<int>(count)};
}

// Constructor validation errors surface as file errors.
OvoSvmModel assemble(std::vector<int> classes, std::vector<std::string> names, SvmConfig config,
                     FeatureMeta meta, Standardizer st, std::vector<LinearModel> models) {
  try {
    return OvoSvmModel(std::move(classes), std::move(names), config, meta, std::move(st),
                       std::move(models));
  } catch (const Error& e) {
    fail(ErrorCode::IoError, std::string("inconsistent model data: ") + e.what());
  }
}

}  // namespace

std::vector<std::uint8_t> encode_model(const OvoSvmModel& model) {
  detail::ByteWriter w;
  w.raw(kModelMagic);
  w.u32(static_cast<std::uint32_t>(model.classes().size()));
  for (int label : model.classes()) w.i32(label);
  w.u32(static_cast<std::uint32_t>(model.class_names().size()));
  for (const auto& name : model.class_names()) w.string(name);

  w.f64(model.config().c);
  w.u32(static_cast<std::uint32_t>(model.config().epochs));
  w.u64(model.config().seed);

  const auto& meta = model.meta();
  w.u32(static_cast<std::uint32_t>(meta.method));
  w.u32(static_cast<std::uint32_t>(meta.grid.rows));
  w.u32(static_cast<std::uint32_t>(meta.grid.cols));
  w.u32(static_cast<std::uint32_t>(meta.norm));
  w.u32(static_cast<std::uint32_t>(meta.code_count));

  w.f64_array(model.standardizer().mean);
  w.f64_array(model.standardizer().inv_std);

  w.u32(static_cast<std::uint32_t>(model.models().size()));
  for (const auto& m : model.models()) {
    w.i32(m.label_a);
    w.i32(m.label_b);
    w.f64(m.bias);
    w.f64_array(m.weights);
  }
  return std::move(w.bytes());
}

OvoSvmModel decode_model(std::span<const std::uint8_t> bytes) {
  detail::ByteReader r(bytes, ErrorCode::IoError);
  r.expect_magic(kModelMagic);

  const auto k = r.u32();
  if (k > r.remaining() / 4) fail(ErrorCode::IoError, "truncated class list");
  std::vector<int> classes(k);
  for (auto& label : classes) label = r.i32();
  const auto name_count = r.u32();
  if (name_count > r.remaining() / 4) fail(ErrorCode::IoError, "truncated class names");
  std::vector<std::string> names(name_count);
  for (auto& name : names) name = r.string();

  SvmConfig config;
  config.c = r.f64();
  config.epochs = static_cast<int>(r.u32());
  config.seed = r.u64();

  const auto method = r.u32();
  const auto rows = r.u32();
  const auto cols = r.u32();
  const auto norm = r.u32();
  const auto count = r.u32();
  const FeatureMeta meta = make_meta(method, rows, cols, norm, count);

  Standardizer st;
  st.mean = r.f64_array();
  st.inv_std = r.f64_array();

  const auto model_count = r.u32();
  if (model_count > r.remaining() / 24) fail(ErrorCode::IoError, "truncated model list");
  std::vector<LinearModel> models(model_count);
  for (auto& m : models) {
    m.label_a = r.i32();
    m.label_b = r.i32();
    m.bias = r.f64();
    m.weights = r.f64_array();
  }
  if (r.remaining() != 0) fail(ErrorCode::IoError, "trailing bytes after model data");
  return assemble(std::move(classes), std::move(names), config, meta, std::move(st),
                  std::move(models));
}

void save_model(const OvoSvmModel& model, const std::filesystem::path& path) {
  detail::write_file(path, encode_model(model));
}

OvoSvmModel load_model(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    fail(ErrorCode::FileNotFound, "no such model file: " + path.string());
  }
  const auto bytes = detail::read_file(path);
  return decode_model(bytes);
}

std::string model_to_json(const OvoSvmModel& model) {
  using nlohmann::json;
  json j;
  j["format"] = "DPSVM001";
  j["classes"] = model.classes();
  j["class_names"] = model.class_names();
  j["config"] = {{"C", model.config().c},
                 {"epochs", model.config().epochs},
                 {"seed", model.config().seed}};
  const auto& meta = model.meta();
  j["feature_meta"] = {{"method", to_string(meta.method)},
                       {"grid", to_string(meta.grid)},
                       {"norm", to_string(meta.norm)},
                       {"code_count", meta.code_count}};
  j["standardizer"] = {{"mean", model.standardizer().mean},
                       {"inv_std", model.standardizer().inv_std}};
  json pairs = json::array();
  for (const auto& m : model.models()) {
    pairs.push_back({{"label_a", m.label_a},
                     {"label_b", m.label_b},
                     {"bias", m.bias},
                     {"weights", m.weights}});
  }
  j["models"] = std::move(pairs);
  return j.dump(2);
}

OvoSvmModel model_from_json(const std::string& text) {
  using nlohmann::json;
  try {
    const json j = json::parse(text);
    SvmConfig config;
    config.c = j.at("config").at("C").get<double>();
    config.epochs = j.at("config").at("epochs").get<int>();
    config.seed = j.at("config").at("seed").get<std::uint64_t>();
    const auto& fm = j.at("feature_meta");
    FeatureMeta meta;
    meta.method = parse_method(fm.at("method").get<std::string>());
    meta.grid = parse_grid(fm.at("grid").get<std::string>());
    meta.norm = parse_normalization(fm.at("norm").get<std::string>());
    meta.code_count = fm.at("code_count").get<int>();
    Standardizer st;
    st.mean = j.at("standardizer").at("mean").get<std::vector<double>>();
    st.inv_std = j.at("standardizer").at("inv_std").get<std::vector<double>>();
    std::vector<LinearModel> models;
    for (const auto& pm : j.at("models")) {
      LinearModel m;
      m.label_a = pm.at("label_a").get<int>();
      m.label_b = pm.at("label_b").get<int>();
      m.bias = pm.at("bias").get<double>();
      m.weights = pm.at("weights").get<std::vector<double>>();
      models.push_back(std::move(m));
    }
    return assemble(j.at("classes").get<std::vector<int>>(),
                    j.at("class_names").get<std::vector<std::string>>(), config, meta,
                    std::move(st), std::move(models));
  } catch (const json::exception& e) {
    fail(ErrorCode::IoError, std::string("malformed model JSON: ") + e.what());
  }
}

}  // namespace dirpat
