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

#include "dirpat/compass.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>

#include "dirpat/error.hpp"

namespace dirpat {

namespace {

// Kernel cell (row-major 3x3 index) of each ring direction.
constexpr int kRingCell[kDirectionCount] = {5, 2, 1, 0, 3, 6, 7, 8};

std::array<Kernel3x3, kDirectionCount> build_masks() {
  std::array<Kernel3x3, kDirectionCount> masks;
  for (int k = 0; k < kDirectionCount; ++k) {
    masks[k].weights.fill(-1);
    for (int d = -1; d <= 1; ++d) {
      masks[k].weights[kRingCell[(k + d + kDirectionCount) % kDirectionCount]] = 2;
    }
  }
  return masks;
}

void check_inside(const ResponseStack& stack, int row, int col) {
  if (row < 0 || col < 0 || row >= stack.height() || col >= stack.width()) {
    fail(ErrorCode::OutOfBounds, "pixel (" + std::to_string(row) + "," + std::to_string(col) +
                                     ") outside " + std::to_string(stack.width()) + "x" +
                                     std::to_string(stack.height()) + " response stack");
  }
}

}  // namespace

DirectionIndex::DirectionIndex(int value) : value_(value) {
  if (value < 0 || value >= kDirectionCount) {
    fail(ErrorCode::InvalidArgument, "direction index out of range: " + std::to_string(value));
  }
}

const std::array<Kernel3x3, kDirectionCount>& compass_masks() noexcept {
  static const auto masks = build_masks();
  return masks;
}

std::string format_masks() {
  std::ostringstream out;
  const auto& masks = compass_masks();
  for (int k = 0; k < kDirectionCount; ++k) {
    if (k > 0) out << '\n';
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        if (c > 0) out << ' ';
        out << masks[k].weights[r * 3 + c];
      }
      out << '\n';
    }
  }
  return out.str();
}

ResponseStack::ResponseStack(int width, int height) : width_(width), height_(height) {
  for (auto& p : planes_) p = ResponseImage(width, height);
}

// Every mask is 2 on a three-cell arc and -1 elsewhere, so its response is
// 3 * (arc sum) - (sum of all nine cells). One pass yields all eight planes.
ResponseStack response_stack(const GrayImage& img) {
  if (img.width() < kMinEncodeSide || img.height() < kMinEncodeSide) {
    fail(ErrorCode::ImageTooSmall, "encoders need at least 5x5 pixels, got " +
                                       std::to_string(img.width()) + "x" +
                                       std::to_string(img.height()));
  }
  const GrayImage padded = pad_replicate(img, 1);
  const int w = img.width();
  const int h = img.height();
  ResponseStack stack(w, h);

  std::array<std::int32_t*, kDirectionCount> out;
  for (int k = 0; k < kDirectionCount; ++k) out[k] = stack.plane(k).values().data();

  const auto pw = static_cast<std::size_t>(padded.width());
  const std::uint8_t* base = padded.pixels().data();
  for (int r = 0; r < h; ++r) {
    const std::uint8_t* top = base + static_cast<std::size_t>(r) * pw;
    const std::uint8_t* mid = top + pw;
    const std::uint8_t* bot = mid + pw;
    for (int c = 0; c < w; ++c) {
      int ring[kDirectionCount];
      ring[0] = mid[c + 2];
      ring[1] = top[c + 2];
      ring[2] = top[c + 1];
      ring[3] = top[c];
      ring[4] = mid[c];
      ring[5] = bot[c];
      ring[6] = bot[c + 1];
      ring[7] = bot[c + 2];
      int total = mid[c + 1];
      for (int v : ring) total += v;
      const std::size_t idx = static_cast<std::size_t>(r) * static_cast<std::size_t>(w) +
                              static_cast<std::size_t>(c);
      for (int k = 0; k < kDirectionCount; ++k) {
        const int arc = ring[(k + 7) & 7] + ring[k] + ring[(k + 1) & 7];
        out[k][idx] = 3 * arc - total;
      }
    }
  }
  return stack;
}

DirectionIndex primary_direction(const ResponseStack& stack, int row, int col) {
  check_inside(stack, row, col);
  int best = 0;
  int best_mag = -1;
  for (int k = 0; k < kDirectionCount; ++k) {
    const int mag = std::abs(stack.plane(k).at(row, col));
    if (mag > best_mag) {
      best_mag = mag;
      best = k;
    }
  }
  return DirectionIndex(best);
}

DirectionIndex secondary_direction(const ResponseStack& stack, int row, int col) {
  check_inside(stack, row, col);
  int best = 0;
  int best_mag = -1;
  for (int k = 0; k < kDirectionCount; ++k) {
    const DirectionIndex dir(k);
    const int nr = std::clamp(row + dir.row_offset(), 0, stack.height() - 1);
    const int nc = std::clamp(col + dir.col_offset(), 0, stack.width() - 1);
    const int mag = std::abs(stack.plane(k).at(nr, nc));
    if (mag > best_mag) {
      best_mag = mag;
      best = k;
    }
  }
  return DirectionIndex(best);
}

}  // namespace dirpat
