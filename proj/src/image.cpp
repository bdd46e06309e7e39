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

#include "dirpat/image.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dirpat/error.hpp"

namespace dirpat {

namespace {

void check_dims(int width, int height) {
  if (width < 1 || height < 1) {
    fail(ErrorCode::InvalidArgument,
         "image dimensions must be positive, got " + std::to_string(width) + "x" +
             std::to_string(height));
  }
}

}  // namespace

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
  check_dims(width, height);
  pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dims(width, height);
  if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    fail(ErrorCode::InvalidArgument, "pixel buffer does not match image dimensions");
  }
}

std::uint8_t GrayImage::clamped(int row, int col) const noexcept {
  row = std::clamp(row, 0, height_ - 1);
  col = std::clamp(col, 0, width_ - 1);
  return pixels_[index(row, col)];
}

int Kernel3x3::sum() const noexcept { return std::accumulate(weights.begin(), weights.end(), 0); }

Kernel3x3 Kernel3x3::rotated180() const noexcept {
  Kernel3x3 out;
  std::reverse_copy(weights.begin(), weights.end(), out.weights.begin());
  return out;
}

ResponseImage::ResponseImage(int width, int height) : width_(width), height_(height) {
  check_dims(width, height);
  values_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

GrayImage pad_replicate(const GrayImage& img, int margin) {
  if (margin < 0) fail(ErrorCode::InvalidArgument, "negative padding margin");
  if (margin == 0) return img;
  GrayImage out(img.width() + 2 * margin, img.height() + 2 * margin);
  for (int r = 0; r < out.height(); ++r) {
    for (int c = 0; c < out.width(); ++c) {
      out.at(r, c) = img.clamped(r - margin, c - margin);
    }
  }
  return out;
}

ResponseImage correlate3x3(const GrayImage& padded, const Kernel3x3& kernel) {
  if (padded.width() < 3 || padded.height() < 3) {
    fail(ErrorCode::ImageTooSmall, "correlate3x3 needs at least a 3x3 input");
  }
  ResponseImage out(padded.width() - 2, padded.height() - 2);
  for (int r = 0; r < out.height(); ++r) {
    for (int c = 0; c < out.width(); ++c) {
      int acc = 0;
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          acc += kernel.at(dr, dc) * padded.at(r + 1 + dr, c + 1 + dc);
        }
      }
      out.at(r, c) = acc;
    }
  }
  return out;
}

}  // namespace dirpat
