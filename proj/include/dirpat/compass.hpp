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
#include <string>

#include "dirpat/image.hpp"

namespace dirpat {

// One of the eight compass directions, counter-clockwise from East.
class DirectionIndex {
 public:
  constexpr DirectionIndex() = default;
  explicit DirectionIndex(int value);

  constexpr int value() const noexcept { return value_; }

  // (row delta, column delta) of the neighbor this direction points at.
  constexpr int row_offset() const noexcept { return kOffsets[value_][0]; }
  constexpr int col_offset() const noexcept { return kOffsets[value_][1]; }

  friend constexpr bool operator==(DirectionIndex, DirectionIndex) = default;

 private:
  static constexpr int kOffsets[8][2] = {
      {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}, {1, 0}, {1, 1}};

  int value_ = 0;
};

inline constexpr int kDirectionCount = 8;

// Mask k carries weight 2 on the three ring cells nearest direction k and -1
// on the other five cells and the center. Each mask is the previous one
// turned 45 degrees counter-clockwise.
const std::array<Kernel3x3, kDirectionCount>& compass_masks() noexcept;

// Masks as plain text: three rows per mask, blank line between masks.
std::string format_masks();

class ResponseStack {
 public:
  ResponseStack() = default;
  ResponseStack(int width, int height);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  const ResponseImage& plane(int direction) const { return planes_[direction]; }
  ResponseImage& plane(int direction) { return planes_[direction]; }

 private:
  int width_ = 0;
  int height_ = 0;
  std::array<ResponseImage, kDirectionCount> planes_;
};

// Minimum image side accepted by every encoder.
inline constexpr int kMinEncodeSide = 5;

// Responses of all eight masks over a replicate-padded copy of `img`; each
// plane has the dimensions of `img`. Requires width, height >= 5.
ResponseStack response_stack(const GrayImage& img);

// argmax_k |plane_k(row, col)|, lowest k on ties.
DirectionIndex primary_direction(const ResponseStack& stack, int row, int col);

// argmax_k |plane_k(neighbor_k)| where neighbor_k is the direction-k neighbor
// of (row, col), clamped onto the stack. Lowest k on ties.
DirectionIndex secondary_direction(const ResponseStack& stack, int row, int col);

}  // namespace dirpat
