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

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace dirpat {

// 8-bit grayscale raster, row-major.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, std::uint8_t fill = 0);
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool empty() const noexcept { return pixels_.empty(); }

  std::uint8_t at(int row, int col) const { return pixels_[index(row, col)]; }
  std::uint8_t& at(int row, int col) { return pixels_[index(row, col)]; }

  // Reads with coordinates clamped onto the image (replicate border).
  std::uint8_t clamped(int row, int col) const noexcept;

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t index(int row, int col) const noexcept {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// 3x3 integer weights, row-major: weights[(dr + 1) * 3 + (dc + 1)].
struct Kernel3x3 {
  std::array<int, 9> weights{};

  int at(int dr, int dc) const noexcept { return weights[(dr + 1) * 3 + (dc + 1)]; }
  int sum() const noexcept;
  Kernel3x3 rotated180() const noexcept;

  friend bool operator==(const Kernel3x3&, const Kernel3x3&) = default;
};

// Signed per-pixel filter output.
class ResponseImage {
 public:
  ResponseImage() = default;
  ResponseImage(int width, int height);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  std::int32_t at(int row, int col) const { return values_[index(row, col)]; }
  std::int32_t& at(int row, int col) { return values_[index(row, col)]; }

  std::span<const std::int32_t> values() const noexcept { return values_; }
  std::span<std::int32_t> values() noexcept { return values_; }

  friend bool operator==(const ResponseImage&, const ResponseImage&) = default;

 private:
  std::size_t index(int row, int col) const noexcept {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::int32_t> values_;
};

// Grows the image by `margin` on every side, replicating the nearest edge pixel.
GrayImage pad_replicate(const GrayImage& img, int margin);

// Valid-region cross-correlation (no kernel flip). The output is two pixels
// narrower and shorter than the input, so a 1-pixel replicate pad beforehand
// yields an output the size of the unpadded image.
ResponseImage correlate3x3(const GrayImage& padded, const Kernel3x3& kernel);

// Decodes PGM (P2/P5, maxval 255) or PNG. Color PNGs are reduced with
// integer BT.601 luma.
GrayImage load_grayscale(const std::filesystem::path& path);

// Writes a binary (P5) PGM.
void write_pgm(const GrayImage& img, const std::filesystem::path& path);

// round(0.299 R + 0.587 G + 0.114 B) in exact integer arithmetic.
constexpr std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept {
  return static_cast<std::uint8_t>((299 * r + 587 * g + 114 * b + 500) / 1000);
}

}  // namespace dirpat
