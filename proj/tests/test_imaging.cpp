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

#include <doctest.h>
#include <png.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "dirpat/compass.hpp"
#include "dirpat/image.hpp"
#include "support.hpp"

using dirpat::ErrorCode;
using dirpat::GrayImage;
using dirpat::Kernel3x3;

namespace {

void write_bytes(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out << bytes;
}

void write_rgb_png(const std::filesystem::path& path, int w, int h, const std::vector<std::uint8_t>& rgb) {
  FILE* fp = std::fopen(path.string().c_str(), "wb");
  REQUIRE(fp != nullptr);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  png_init_io(png, fp);
  png_set_IHDR(png, info, static_cast<png_uint_32>(w), static_cast<png_uint_32>(h), 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int r = 0; r < h; ++r) {
    png_write_row(png, rgb.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(w) * 3);
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  std::fclose(fp);
}

Kernel3x3 kernel(std::initializer_list<int> w) {
  Kernel3x3 k;
  std::copy(w.begin(), w.end(), k.weights.begin());
  return k;
}

}  // namespace

TEST_CASE("ascii pgm decodes") {
  testing::TempDir dir("pgm");
  write_bytes(dir / "a.pgm", "P2\n2 2\n255\n0 0 0 0\n");
  const GrayImage img = dirpat::load_grayscale(dir / "a.pgm");
  CHECK(img.width() == 2);
  CHECK(img.height() == 2);
  for (auto p : img.pixels()) CHECK(p == 0);
}

TEST_CASE("ascii pgm with comments and row-major layout") {
  testing::TempDir dir("pgm");
  write_bytes(dir / "b.pgm", "P2\n# comment\n3 2\n255\n1 2 3\n4 5 6\n");
  const GrayImage img = dirpat::load_grayscale(dir / "b.pgm");
  CHECK(img.width() == 3);
  CHECK(img.height() == 2);
  CHECK(img.at(0, 2) == 3);
  CHECK(img.at(1, 0) == 4);
}

TEST_CASE("binary pgm round trips through write_pgm") {
  testing::TempDir dir("pgm");
  dirpat::detail::Rng rng(3);
  const GrayImage img = testing::random_image(rng, 7, 5);
  dirpat::write_pgm(img, dir / "c.pgm");
  CHECK(dirpat::load_grayscale(dir / "c.pgm") == img);
}

TEST_CASE("pgm error paths") {
  testing::TempDir dir("pgm");
  CHECK(testing::error_of([&] { dirpat::load_grayscale(dir / "missing.pgm"); }) == ErrorCode::FileNotFound);

  write_bytes(dir / "short.pgm", std::string("P5\n4 4\n255\n") + std::string(10, '\0'));
  CHECK(testing::error_of([&] { dirpat::load_grayscale(dir / "short.pgm"); }) == ErrorCode::CorruptImage);

  write_bytes(dir / "deep.pgm", "P2\n1 1\n65535\n7\n");
  CHECK(testing::error_of([&] { dirpat::load_grayscale(dir / "deep.pgm"); }) == ErrorCode::UnsupportedFormat);

  write_bytes(dir / "text.txt", "hello world");
  CHECK(testing::error_of([&] { dirpat::load_grayscale(dir / "text.txt"); }) == ErrorCode::UnsupportedFormat);

  write_bytes(dir / "trunc.png", "\x89PNG\r\n\x1a\n\0\0\0\rIHDR");
  CHECK(testing::error_of([&] { dirpat::load_grayscale(dir / "trunc.png"); }) == ErrorCode::CorruptImage);
}

TEST_CASE("luma weights") {
  CHECK(dirpat::luma(255, 255, 255) == 255);
  CHECK(dirpat::luma(0, 0, 255) == 29);
  CHECK(dirpat::luma(0, 0, 0) == 0);
  CHECK(dirpat::luma(255, 0, 0) == 76);
  CHECK(dirpat::luma(0, 255, 0) == 150);
}

TEST_CASE("rgb png is reduced with luma") {
  testing::TempDir dir("png");
  const std::vector<std::uint8_t> rgb = {255, 255, 255, 0, 0, 255, 10, 20, 30, 255, 0, 0};
  write_rgb_png(dir / "rgb.png", 2, 2, rgb);
  const GrayImage img = dirpat::load_grayscale(dir / "rgb.png");
  REQUIRE(img.width() == 2);
  REQUIRE(img.height() == 2);
  CHECK(img.at(0, 0) == 255);
  CHECK(img.at(0, 1) == 29);
  CHECK(img.at(1, 0) == dirpat::luma(10, 20, 30));
  CHECK(img.at(1, 1) == 76);
}

TEST_CASE("pad_replicate examples") {
  dirpat::detail::Rng rng(4);
  const GrayImage img = testing::random_image(rng, 6, 4);
  CHECK(dirpat::pad_replicate(img, 0) == img);

  const GrayImage one(1, 1, 77);
  const GrayImage padded = dirpat::pad_replicate(one, 1);
  CHECK(padded.width() == 3);
  CHECK(padded.height() == 3);
  for (auto p : padded.pixels()) CHECK(p == 77);

  GrayImage two(2, 1);
  two.at(0, 0) = 10;
  two.at(0, 1) = 20;
  const GrayImage p2 = dirpat::pad_replicate(two, 1);
  CHECK(p2.width() == 4);
  CHECK(p2.height() == 3);
  for (int r = 0; r < 3; ++r) {
    CHECK(p2.at(r, 0) == 10);
    CHECK(p2.at(r, 1) == 10);
    CHECK(p2.at(r, 2) == 20);
    CHECK(p2.at(r, 3) == 20);
  }
}

TEST_CASE("pad_replicate interior and border property") {
  dirpat::detail::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int w = 1 + static_cast<int>(rng.below(9));
    const int h = 1 + static_cast<int>(rng.below(9));
    const int m = static_cast<int>(rng.below(4));
    const GrayImage img = testing::random_image(rng, w, h);
    const GrayImage p = dirpat::pad_replicate(img, m);
    REQUIRE(p.width() == w + 2 * m);
    REQUIRE(p.height() == h + 2 * m);
    for (int r = 0; r < p.height(); ++r) {
      for (int c = 0; c < p.width(); ++c) {
        const int sr = std::clamp(r - m, 0, h - 1);
        const int sc = std::clamp(c - m, 0, w - 1);
        CHECK(p.at(r, c) == img.at(sr, sc));
      }
    }
  }
}

TEST_CASE("correlate3x3 examples") {
  const Kernel3x3 east = kernel({-1, -1, 2, -1, -1, 2, -1, -1, 2});
  const GrayImage flat(6, 6, 100);
  const auto zero = dirpat::correlate3x3(dirpat::pad_replicate(flat, 1), east);
  CHECK(zero.width() == 6);
  CHECK(zero.height() == 6);
  for (auto v : zero.values()) CHECK(v == 0);

  dirpat::detail::Rng rng(6);
  const GrayImage img = testing::random_image(rng, 9, 7);
  const auto same = dirpat::correlate3x3(dirpat::pad_replicate(img, 1), kernel({0, 0, 0, 0, 1, 0, 0, 0, 0}));
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) CHECK(same.at(r, c) == img.at(r, c));
  }

  // Pixel (2,2) of the step sees columns 1..3 = 0, 100, 100 in every row:
  //   (-1)(0) + (-1)(100) + 2(100) per row = 100, three rows = 300.
  const GrayImage step = testing::vertical_step();
  const auto resp = dirpat::correlate3x3(dirpat::pad_replicate(step, 1), east);
  CHECK(resp.at(2, 2) == 300);
}

TEST_CASE("correlate3x3 matches a brute-force sum without kernel flip") {
  dirpat::detail::Rng rng(7);
  Kernel3x3 k = kernel({1, 2, 3, 4, 5, 6, 7, 8, -9});
  const GrayImage img = testing::random_image(rng, 8, 6);
  const GrayImage padded = dirpat::pad_replicate(img, 1);
  const auto resp = dirpat::correlate3x3(padded, k);
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      int acc = 0;
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) acc += k.at(dr, dc) * img.clamped(r + dr, c + dc);
      }
      CHECK(resp.at(r, c) == acc);
    }
  }
}

TEST_CASE("correlate3x3 rejects inputs smaller than the kernel") {
  const Kernel3x3 k = kernel({0, 0, 0, 0, 1, 0, 0, 0, 0});
  CHECK(testing::error_of([&] { dirpat::correlate3x3(GrayImage(2, 5), k); }) == ErrorCode::ImageTooSmall);
  CHECK(testing::error_of([&] { dirpat::correlate3x3(GrayImage(5, 2), k); }) == ErrorCode::ImageTooSmall);
  CHECK(dirpat::correlate3x3(GrayImage(3, 3), k).width() == 1);
}

TEST_CASE("zero-sum kernels scale with gain and ignore offset") {
  dirpat::detail::Rng rng(8);
  for (const auto& k : dirpat::compass_masks()) {
    for (int trial = 0; trial < 10; ++trial) {
      const int a = 1 + static_cast<int>(rng.below(3));
      const int b = static_cast<int>(rng.below(40));
      const int hi = (255 - b) / a;
      const GrayImage img = testing::random_image(rng, 8, 8, 0, hi);
      GrayImage mapped = img;
      for (auto& p : mapped.pixels()) p = static_cast<std::uint8_t>(a * p + b);
      const auto r0 = dirpat::correlate3x3(dirpat::pad_replicate(img, 1), k);
      const auto r1 = dirpat::correlate3x3(dirpat::pad_replicate(mapped, 1), k);
      for (std::size_t i = 0; i < r0.values().size(); ++i) CHECK(r1.values()[i] == a * r0.values()[i]);
    }
  }
}

TEST_CASE("correlation commutes with 180 degree rotation of image and kernel") {
  dirpat::detail::Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    Kernel3x3 k;
    for (auto& w : k.weights) w = static_cast<int>(rng.below(11)) - 5;
    const GrayImage img = testing::random_image(rng, 7 + trial, 5 + trial);
    const auto r0 = dirpat::correlate3x3(dirpat::pad_replicate(img, 1), k);
    const auto r1 = dirpat::correlate3x3(dirpat::pad_replicate(testing::rotate_180(img), 1), k.rotated180());
    for (int r = 0; r < img.height(); ++r) {
      for (int c = 0; c < img.width(); ++c) {
        CHECK(r1.at(img.height() - 1 - r, img.width() - 1 - c) == r0.at(r, c));
      }
    }
  }
}

TEST_CASE("response bound holds for the compass masks") {
  dirpat::detail::Rng rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const GrayImage img = testing::random_image(rng, 9, 9, 0, 255);
    for (const auto& k : dirpat::compass_masks()) {
      const auto resp = dirpat::correlate3x3(dirpat::pad_replicate(img, 1), k);
      for (auto v : resp.values()) CHECK(std::abs(v) <= 1530);
    }
  }
}
