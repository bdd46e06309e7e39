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
#include <stdexcept>
#include <string>

#include <unistd.h>

#include "dirpat/detail/rng.hpp"
#include "dirpat/error.hpp"
#include "dirpat/image.hpp"

namespace testing {

inline dirpat::GrayImage random_image(dirpat::detail::Rng& rng, int width, int height, int lo = 0,
                                      int hi = 255) {
  dirpat::GrayImage img(width, height);
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(lo + static_cast<int>(rng.below(span)));
  return img;
}

// Quarter turn counter-clockwise: rotated(r, c) = img(c, W - 1 - r).
inline dirpat::GrayImage rotate_ccw(const dirpat::GrayImage& img) {
  dirpat::GrayImage out(img.height(), img.width());
  for (int r = 0; r < out.height(); ++r) {
    for (int c = 0; c < out.width(); ++c) out.at(r, c) = img.at(c, img.width() - 1 - r);
  }
  return out;
}

inline dirpat::GrayImage rotate_180(const dirpat::GrayImage& img) {
  dirpat::GrayImage out(img.width(), img.height());
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) out.at(r, c) = img.at(img.height() - 1 - r, img.width() - 1 - c);
  }
  return out;
}

// 5x5 image, columns 0-1 at 0 and columns 2-4 at 100.
inline dirpat::GrayImage vertical_step() {
  dirpat::GrayImage img(5, 5);
  for (int r = 0; r < 5; ++r) {
    for (int c = 2; c < 5; ++c) img.at(r, c) = 100;
  }
  return img;
}

// Fresh, empty directory under the system temp dir.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("dirpat_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

template <class F>
dirpat::ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const dirpat::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a dirpat::Error");
}

}  // namespace testing
