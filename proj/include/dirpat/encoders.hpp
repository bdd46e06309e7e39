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
#include <string_view>
#include <vector>

#include "dirpat/image.hpp"

namespace dirpat {

enum class Method : std::uint8_t { Retrain = 0, Lbp = 1, CsLbp = 2, Ldp = 3, Ldn = 4 };

std::string_view to_string(Method method) noexcept;
// Accepts RETRAIN, LBP, CSLBP, LDP, LDN (case-insensitive). Throws UnknownMethod.
Method parse_method(std::string_view name);
int code_count(Method method) noexcept;

// Center-symmetric pairs count as set when first > second + threshold.
inline constexpr int kCsLbpThreshold = 0;
// Number of strongest directions marked by LDP.
inline constexpr int kLdpTopK = 3;

class CodeMap {
 public:
  CodeMap() = default;
  CodeMap(int width, int height, Method method);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  Method method() const noexcept { return method_; }
  int code_count() const noexcept { return dirpat::code_count(method_); }

  std::uint8_t at(int row, int col) const { return codes_[index(row, col)]; }
  std::uint8_t& at(int row, int col) { return codes_[index(row, col)]; }

  std::span<const std::uint8_t> codes() const noexcept { return codes_; }
  std::span<std::uint8_t> codes() noexcept { return codes_; }

  friend bool operator==(const CodeMap&, const CodeMap&) = default;

 private:
  std::size_t index(int row, int col) const noexcept {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }

  int width_ = 0;
  int height_ = 0;
  Method method_ = Method::Retrain;
  std::vector<std::uint8_t> codes_;
};

// code = 8 * primary + secondary, in [0, 64).
CodeMap encode_retrain(const GrayImage& img);

// LBP, CSLBP, LDP or LDN. Passing Method::Retrain forwards to encode_retrain.
CodeMap encode_baseline(const GrayImage& img, Method method);

CodeMap encode(const GrayImage& img, Method method);

// Dense rank of an 8-bit word with exactly three bits set, or -1.
int ldp_dense_code(unsigned word) noexcept;
// Dense rank of an ordered (max, min) direction pair with max != min.
int ldn_dense_code(int max_dir, int min_dir) noexcept;

// Visualization: each code scaled by floor(255 / (code_count - 1)).
GrayImage codemap_to_gray(const CodeMap& codes);

// Binary code map file: "DPCM0001", u32 width, u32 height, u32 method,
// u32 code_count, then width * height code bytes. Little-endian.
void write_codemap(const CodeMap& codes, const std::filesystem::path& path);
CodeMap read_codemap(const std::filesystem::path& path);

}  // namespace dirpat
