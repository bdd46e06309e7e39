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

// Test-only reference implementations. Nothing here calls into the library's
// response stack, mask table or encoder code; images are read pixel by pixel
// with coordinates clamped onto the image.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "dirpat/image.hpp"

namespace oracle {

// The eight compass masks, typed in by hand, row-major. Mask 1 carries -1 in
// its bottom-right cell (the printed figure shows 1, which breaks the zero
// sum and the 45-degree rotation pattern of the other seven).
inline constexpr int kMasks[8][3][3] = {
    {{-1, -1, 2}, {-1, -1, 2}, {-1, -1, 2}},
    {{-1, 2, 2}, {-1, -1, 2}, {-1, -1, -1}},
    {{2, 2, 2}, {-1, -1, -1}, {-1, -1, -1}},
    {{2, 2, -1}, {2, -1, -1}, {-1, -1, -1}},
    {{2, -1, -1}, {2, -1, -1}, {2, -1, -1}},
    {{-1, -1, -1}, {2, -1, -1}, {2, 2, -1}},
    {{-1, -1, -1}, {-1, -1, -1}, {2, 2, 2}},
    {{-1, -1, -1}, {-1, -1, 2}, {-1, 2, 2}},
};

// Direction k -> (row delta, column delta): E, NE, N, NW, W, SW, S, SE.
inline constexpr int kOffsets[8][2] = {{0, 1},  {-1, 1}, {-1, 0}, {-1, -1},
                                       {0, -1}, {1, -1}, {1, 0},  {1, 1}};

inline int clamp_read(const dirpat::GrayImage& img, int r, int c) {
  r = std::clamp(r, 0, img.height() - 1);
  c = std::clamp(c, 0, img.width() - 1);
  return img.at(r, c);
}

// Mask k applied to the 3x3 patch centered on (r, c).
inline int mask_response(const dirpat::GrayImage& img, int k, int r, int c) {
  int acc = 0;
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) acc += kMasks[k][dr + 1][dc + 1] * clamp_read(img, r + dr, c + dc);
  }
  return acc;
}

inline int argmax_abs(const std::array<int, 8>& v) {
  int best = 0;
  for (int k = 1; k < 8; ++k) {
    if (std::abs(v[k]) > std::abs(v[best])) best = k;
  }
  return best;
}

inline int primary(const dirpat::GrayImage& img, int r, int c) {
  std::array<int, 8> resp;
  for (int k = 0; k < 8; ++k) resp[k] = mask_response(img, k, r, c);
  return argmax_abs(resp);
}

// Mask k evaluated on the patch centered on the direction-k neighbor; the
// neighbor itself is clamped onto the image first.
inline int secondary(const dirpat::GrayImage& img, int r, int c) {
  std::array<int, 8> resp;
  for (int k = 0; k < 8; ++k) {
    const int nr = std::clamp(r + kOffsets[k][0], 0, img.height() - 1);
    const int nc = std::clamp(c + kOffsets[k][1], 0, img.width() - 1);
    resp[k] = mask_response(img, k, nr, nc);
  }
  return argmax_abs(resp);
}

inline std::vector<int> retrain_codes(const dirpat::GrayImage& img) {
  std::vector<int> codes;
  codes.reserve(static_cast<std::size_t>(img.width()) * static_cast<std::size_t>(img.height()));
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) codes.push_back(8 * primary(img, r, c) + secondary(img, r, c));
  }
  return codes;
}

// Number of 3-subsets of {0..7} that precede {a < b < c} lexicographically.
inline int triple_rank(int a, int b, int c) {
  auto choose2 = [](int n) { return n * (n - 1) / 2; };
  int rank = 0;
  for (int x = 0; x < a; ++x) rank += choose2(7 - x);
  for (int y = a + 1; y < b; ++y) rank += 7 - y;
  rank += c - b - 1;
  return rank;
}

// Naive LBP: bit k set when neighbor k >= center.
inline int lbp_code(const dirpat::GrayImage& img, int r, int c) {
  const int center = img.at(r, c);
  int code = 0;
  for (int k = 0; k < 8; ++k) {
    if (clamp_read(img, r + kOffsets[k][0], c + kOffsets[k][1]) >= center) code |= 1 << k;
  }
  return code;
}

}  // namespace oracle
