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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dirpat/encoders.hpp"

namespace dirpat {

struct RegionGrid {
  int rows = 7;
  int cols = 6;

  friend bool operator==(const RegionGrid&, const RegionGrid&) = default;
};

// "7x6" -> {7, 6}. Throws InvalidArgument.
RegionGrid parse_grid(std::string_view text);
std::string to_string(const RegionGrid& grid);

enum class Normalization : std::uint8_t { Raw = 0, L1 = 1 };

std::string_view to_string(Normalization norm) noexcept;
Normalization parse_normalization(std::string_view text);

// Everything that must agree between vectors fed to one classifier.
struct FeatureMeta {
  Method method = Method::Retrain;
  RegionGrid grid;
  Normalization norm = Normalization::Raw;
  int code_count = 64;

  std::size_t length() const noexcept {
    return static_cast<std::size_t>(grid.rows) * static_cast<std::size_t>(grid.cols) *
           static_cast<std::size_t>(code_count);
  }

  friend bool operator==(const FeatureMeta&, const FeatureMeta&) = default;
};

// Region-major, code-fastest concatenation of per-region histograms.
struct FeatureVector {
  FeatureMeta meta;
  std::vector<double> values;
};

// First row / column of band `index` when `extent` is cut into `bands`.
constexpr int band_start(int index, int extent, int bands) noexcept {
  return static_cast<int>(static_cast<long long>(index) * extent / bands);
}

FeatureVector region_histograms(const CodeMap& codes, const RegionGrid& grid,
                                Normalization norm = Normalization::Raw);

// CSV: id,label,method,grid,norm,v0,v1,...
void write_feature_csv_header(std::ostream& out, std::size_t length);
void write_feature_csv_row(std::ostream& out, std::string_view id, std::string_view label,
                           const FeatureVector& fv);

// Binary record: "DPFV0001", u64 count, then count little-endian f64 values.
std::vector<std::uint8_t> encode_feature_record(const FeatureVector& fv);
std::vector<double> decode_feature_record(std::span<const std::uint8_t> bytes);
void write_feature_record(const FeatureVector& fv, const std::filesystem::path& path);

}  // namespace dirpat
