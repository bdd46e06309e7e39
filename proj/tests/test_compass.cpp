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

#include <array>

#include "dirpat/compass.hpp"
#include "oracle/naive.hpp"
#include "support.hpp"

using dirpat::ErrorCode;
using dirpat::GrayImage;

namespace {

std::array<int, 8> abs_responses(const dirpat::ResponseStack& s, int r, int c) {
  std::array<int, 8> out{};
  for (int k = 0; k < 8; ++k) out[k] = std::abs(s.plane(k).at(r, c));
  return out;
}

}  // namespace

TEST_CASE("direction offsets follow the counter-clockwise convention") {
  for (int k = 0; k < 8; ++k) {
    const dirpat::DirectionIndex d(k);
    CHECK(d.value() == k);
    CHECK(d.row_offset() == oracle::kOffsets[k][0]);
    CHECK(d.col_offset() == oracle::kOffsets[k][1]);
  }
  CHECK(testing::error_of([] { dirpat::DirectionIndex(8); }) == ErrorCode::InvalidArgument);
  CHECK(testing::error_of([] { dirpat::DirectionIndex(-1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("masks match the hand-typed table") {
  const auto& masks = dirpat::compass_masks();
  for (int k = 0; k < 8; ++k) {
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) CHECK(masks[k].at(dr, dc) == oracle::kMasks[k][dr + 1][dc + 1]);
    }
  }
  CHECK(masks[0].weights == std::array<int, 9>{-1, -1, 2, -1, -1, 2, -1, -1, 2});
  CHECK(masks[2].weights == std::array<int, 9>{2, 2, 2, -1, -1, -1, -1, -1, -1});
}

TEST_CASE("masks are zero-sum and opposite masks are 180 degree rotations") {
  const auto& masks = dirpat::compass_masks();
  for (int k = 0; k < 8; ++k) {
    CHECK(masks[k].sum() == 0);
    CHECK(masks[(k + 4) % 8] == masks[k].rotated180());
  }
}

TEST_CASE("each mask is the previous one turned 45 degrees") {
  // Ring cells in counter-clockwise order starting East.
  const int ring[8][2] = {{0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}, {1, 0}, {1, 1}};
  const auto& masks = dirpat::compass_masks();
  for (int k = 0; k < 8; ++k) {
    const auto& next = masks[(k + 1) % 8];
    CHECK(next.at(0, 0) == masks[k].at(0, 0));
    for (int i = 0; i < 8; ++i) {
      const int j = (i + 1) % 8;
      CHECK(next.at(ring[j][0], ring[j][1]) == masks[k].at(ring[i][0], ring[i][1]));
    }
  }
}

TEST_CASE("masks text dump") {
  const std::string text = dirpat::format_masks();
  CHECK(text.rfind("-1 -1 2\n-1 -1 2\n-1 -1 2\n\n", 0) == 0);
  int lines = 0;
  for (char ch : text) lines += ch == '\n';
  CHECK(lines >= 8 * 3 + 7);
}

TEST_CASE("constant image gives zero responses and index 0") {
  const GrayImage flat(7, 6, 123);
  const auto s = dirpat::response_stack(flat);
  CHECK(s.width() == 7);
  CHECK(s.height() == 6);
  for (int k = 0; k < 8; ++k) {
    for (auto v : s.plane(k).values()) CHECK(v == 0);
  }
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 7; ++c) {
      CHECK(dirpat::primary_direction(s, r, c).value() == 0);
      CHECK(dirpat::secondary_direction(s, r, c).value() == 0);
    }
  }
}

TEST_CASE("vertical step responses at the center") {
  const auto s = dirpat::response_stack(testing::vertical_step());
  CHECK(s.plane(0).at(2, 2) == 300);
  CHECK(s.plane(4).at(2, 2) == -600);
  CHECK(abs_responses(s, 2, 2) == std::array<int, 8>{300, 300, 0, 300, 600, 300, 0, 300});
  CHECK(dirpat::primary_direction(s, 2, 2).value() == 4);
  CHECK(dirpat::secondary_direction(s, 2, 2).value() == 3);
}

TEST_CASE("scaled and offset step keep both indices") {
  GrayImage doubled = testing::vertical_step();
  for (auto& p : doubled.pixels()) p = static_cast<std::uint8_t>(2 * p);
  const auto s2 = dirpat::response_stack(doubled);
  CHECK(dirpat::primary_direction(s2, 2, 2).value() == 4);

  GrayImage shifted = testing::vertical_step();
  for (auto& p : shifted.pixels()) p = static_cast<std::uint8_t>(p + 50);
  const auto s0 = dirpat::response_stack(testing::vertical_step());
  const auto s1 = dirpat::response_stack(shifted);
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 5; ++c) {
      CHECK(dirpat::secondary_direction(s1, r, c) == dirpat::secondary_direction(s0, r, c));
      CHECK(dirpat::primary_direction(s1, r, c) == dirpat::primary_direction(s0, r, c));
    }
  }
}

TEST_CASE("response stack equals per-mask correlation of the padded image") {
  dirpat::detail::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int w = 5 + static_cast<int>(rng.below(20));
    const int h = 5 + static_cast<int>(rng.below(20));
    const GrayImage img = testing::random_image(rng, w, h);
    const auto s = dirpat::response_stack(img);
    const GrayImage padded = dirpat::pad_replicate(img, 1);
    for (int k = 0; k < 8; ++k) {
      CHECK(s.plane(k) == dirpat::correlate3x3(padded, dirpat::compass_masks()[k]));
    }
  }
}

TEST_CASE("primary and secondary agree with the naive oracle everywhere") {
  dirpat::detail::Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const int w = 5 + static_cast<int>(rng.below(12));
    const int h = 5 + static_cast<int>(rng.below(12));
    // Narrow ranges make ties common, which exercises the tie rule.
    const int hi = trial % 3 == 0 ? 2 : 255;
    const GrayImage img = testing::random_image(rng, w, h, 0, hi);
    const auto s = dirpat::response_stack(img);
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) {
        const int p = dirpat::primary_direction(s, r, c).value();
        const int q = dirpat::secondary_direction(s, r, c).value();
        CHECK(p == oracle::primary(img, r, c));
        CHECK(q == oracle::secondary(img, r, c));
        CHECK(p >= 0);
        CHECK(p <= 7);
        CHECK(q >= 0);
        CHECK(q <= 7);
      }
    }
  }
}

TEST_CASE("gain and offset leave both indices unchanged") {
  dirpat::detail::Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const int a = 1 + static_cast<int>(rng.below(3));
    const int b = static_cast<int>(rng.below(30));
    const GrayImage img = testing::random_image(rng, 10, 9, 0, (255 - b) / a);
    GrayImage mapped = img;
    for (auto& p : mapped.pixels()) p = static_cast<std::uint8_t>(a * p + b);
    const auto s0 = dirpat::response_stack(img);
    const auto s1 = dirpat::response_stack(mapped);
    for (int r = 0; r < 9; ++r) {
      for (int c = 0; c < 10; ++c) {
        CHECK(dirpat::primary_direction(s0, r, c) == dirpat::primary_direction(s1, r, c));
        CHECK(dirpat::secondary_direction(s0, r, c) == dirpat::secondary_direction(s1, r, c));
      }
    }
  }
}

TEST_CASE("quarter turn shifts every response plane by two") {
  // Rotating the image counter-clockwise turns an edge facing direction k
  // into one facing k + 2, so plane (k + 2) of the rotated image holds the
  // values plane k had before, on pixels whose patch avoids the border.
  dirpat::detail::Rng rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const GrayImage img = testing::random_image(rng, 16, 12);
    const GrayImage rot = testing::rotate_ccw(img);
    const auto s0 = dirpat::response_stack(img);
    const auto s1 = dirpat::response_stack(rot);
    for (int r = 1; r < rot.height() - 1; ++r) {
      for (int c = 1; c < rot.width() - 1; ++c) {
        const int orow = c;
        const int ocol = img.width() - 1 - r;
        for (int k = 0; k < 8; ++k) CHECK(s1.plane((k + 2) % 8).at(r, c) == s0.plane(k).at(orow, ocol));
      }
    }
  }
}

TEST_CASE("out of range pixels are rejected") {
  const auto s = dirpat::response_stack(GrayImage(6, 5, 9));
  CHECK(testing::error_of([&] { dirpat::primary_direction(s, -1, 0); }) == ErrorCode::OutOfBounds);
  CHECK(testing::error_of([&] { dirpat::primary_direction(s, 5, 0); }) == ErrorCode::OutOfBounds);
  CHECK(testing::error_of([&] { dirpat::secondary_direction(s, 0, 6); }) == ErrorCode::OutOfBounds);
}

TEST_CASE("small images are rejected") {
  CHECK(testing::error_of([] { dirpat::response_stack(GrayImage(4, 9)); }) == ErrorCode::ImageTooSmall);
  CHECK(testing::error_of([] { dirpat::response_stack(GrayImage(9, 4)); }) == ErrorCode::ImageTooSmall);
}
