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

#include "dirpat/encoders.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <string>

#include "dirpat/compass.hpp"
#include "dirpat/error.hpp"

namespace dirpat {

namespace {

constexpr std::array<std::string_view, 5> kMethodNames = {"RETRAIN", "LBP", "CSLBP", "LDP", "LDN"};

std::array<std::int16_t, 256> build_ldp_table() {
  std::array<std::int16_t, 256> table;
  table.fill(-1);
  std::int16_t next = 0;
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      for (int c = b + 1; c < 8; ++c) table[(1u << a) | (1u << b) | (1u << c)] = next++;
    }
  }
  return table;
}

void check_encodable(const GrayImage& img) {
  if (img.width() < kMinEncodeSide || img.height() < kMinEncodeSide) {
    fail(ErrorCode::ImageTooSmall, "encoders need at least 5x5 pixels, got " +
                                       std::to_string(img.width()) + "x" +
                                       std::to_string(img.height()));
  }
}

// Neighbor intensities in direction order, replicate border.
std::array<int, kDirectionCount> neighbors(const GrayImage& img, int r, int c) {
  static constexpr int kOff[kDirectionCount][2] = {{0, 1},  {-1, 1}, {-1, 0}, {-1, -1},
                                                   {0, -1}, {1, -1}, {1, 0},  {1, 1}};
  std::array<int, kDirectionCount> n;
  for (int k = 0; k < kDirectionCount; ++k) n[k] = img.clamped(r + kOff[k][0], c + kOff[k][1]);
  return n;
}

CodeMap encode_lbp(const GrayImage& img) {
  CodeMap out(img.width(), img.height(), Method::Lbp);
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      const int center = img.at(r, c);
      const auto n = neighbors(img, r, c);
      unsigned code = 0;
      for (int k = 0; k < kDirectionCount; ++k) {
        if (n[k] >= center) code |= 1u << k;
      }
      out.at(r, c) = static_cast<std::uint8_t>(code);
    }
  }
  return out;
}

CodeMap encode_cslbp(const GrayImage& img) {
  CodeMap out(img.width(), img.height(), Method::CsLbp);
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      const auto n = neighbors(img, r, c);
      unsigned code = 0;
      for (int k = 0; k < 4; ++k) {
        if (n[k] > n[k + 4] + kCsLbpThreshold) code |= 1u << k;
      }
      out.at(r, c) = static_cast<std::uint8_t>(code);
    }
  }
  return out;
}

CodeMap encode_ldp(const GrayImage& img) {
  const ResponseStack stack = response_stack(img);
  CodeMap out(img.width(), img.height(), Method::Ldp);
  std::array<int, kDirectionCount> order;
  std::array<int, kDirectionCount> mag;
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      for (int k = 0; k < kDirectionCount; ++k) {
        mag[k] = std::abs(stack.plane(k).at(r, c));
        order[k] = k;
      }
      std::partial_sort(order.begin(), order.begin() + kLdpTopK, order.end(),
                        [&](int a, int b) { return mag[a] != mag[b] ? mag[a] > mag[b] : a < b; });
      unsigned word = 0;
      for (int i = 0; i < kLdpTopK; ++i) word |= 1u << order[i];
      out.at(r, c) = static_cast<std::uint8_t>(ldp_dense_code(word));
    }
  }
  return out;
}

CodeMap encode_ldn(const GrayImage& img) {
  const ResponseStack stack = response_stack(img);
  CodeMap out(img.width(), img.height(), Method::Ldn);
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      int max_dir = 0;
      for (int k = 1; k < kDirectionCount; ++k) {
        if (stack.plane(k).at(r, c) > stack.plane(max_dir).at(r, c)) max_dir = k;
      }
      // If every response is equal the minimum is taken among the others.
      int min_dir = max_dir == 0 ? 1 : 0;
      for (int k = min_dir + 1; k < kDirectionCount; ++k) {
        if (k != max_dir && stack.plane(k).at(r, c) < stack.plane(min_dir).at(r, c)) min_dir = k;
      }
      out.at(r, c) = static_cast<std::uint8_t>(ldn_dense_code(max_dir, min_dir));
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Method method) noexcept {
  return kMethodNames[static_cast<std::size_t>(method)];
}

Method parse_method(std::string_view name) {
  std::string upper(name);
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (upper == "CS-LBP") upper = "CSLBP";
  for (std::size_t i = 0; i < kMethodNames.size(); ++i) {
    if (kMethodNames[i] == upper) return static_cast<Method>(i);
  }
  fail(ErrorCode::UnknownMethod, "unknown descriptor method '" + std::string(name) + "'");
}

int code_count(Method method) noexcept {
  switch (method) {
    case Method::Retrain: return 64;
    case Method::Lbp: return 256;
    case Method::CsLbp: return 16;
    case Method::Ldp: return 56;
    case Method::Ldn: return 56;
  }
  return 0;
}

CodeMap::CodeMap(int width, int height, Method method)
    : width_(width), height_(height), method_(method) {
  if (width < 1 || height < 1) fail(ErrorCode::InvalidArgument, "code map dimensions must be positive");
  codes_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

int ldp_dense_code(unsigned word) noexcept {
  static const auto table = build_ldp_table();
  return word < 256 ? table[word] : -1;
}

int ldn_dense_code(int max_dir, int min_dir) noexcept {
  return max_dir * 7 + (min_dir < max_dir ? min_dir : min_dir - 1);
}

CodeMap encode_retrain(const GrayImage& img) {
  check_encodable(img);
  const ResponseStack stack = response_stack(img);
  const int w = img.width();
  const int h = img.height();
  CodeMap out(w, h, Method::Retrain);

  std::array<const std::int32_t*, kDirectionCount> planes;
  for (int k = 0; k < kDirectionCount; ++k) planes[k] = stack.plane(k).values().data();

  // Per-direction neighbor displacement in the flattened plane, valid away
  // from the border; border pixels take the clamped path.
  std::array<std::ptrdiff_t, kDirectionCount> shift;
  for (int k = 0; k < kDirectionCount; ++k) {
    const DirectionIndex d(k);
    shift[k] = static_cast<std::ptrdiff_t>(d.row_offset()) * w + d.col_offset();
  }

  for (int r = 0; r < h; ++r) {
    const bool row_interior = r > 0 && r + 1 < h;
    for (int c = 0; c < w; ++c) {
      const std::ptrdiff_t idx = static_cast<std::ptrdiff_t>(r) * w + c;
      int primary = 0;
      int primary_mag = -1;
      for (int k = 0; k < kDirectionCount; ++k) {
        const int mag = std::abs(planes[k][idx]);
        if (mag > primary_mag) {
          primary_mag = mag;
          primary = k;
        }
      }
      int secondary = 0;
      if (row_interior && c > 0 && c + 1 < w) {
        int secondary_mag = -1;
        for (int k = 0; k < kDirectionCount; ++k) {
          const int mag = std::abs(planes[k][idx + shift[k]]);
          if (mag > secondary_mag) {
            secondary_mag = mag;
            secondary = k;
          }
        }
      } else {
        secondary = secondary_direction(stack, r, c).value();
      }
      out.codes()[static_cast<std::size_t>(idx)] = static_cast<std::uint8_t>(8 * primary + secondary);
    }
  }
  return out;
}

CodeMap encode_baseline(const GrayImage& img, Method method) {
  check_encodable(img);
  switch (method) {
    case Method::Retrain: return encode_retrain(img);
    case Method::Lbp: return encode_lbp(img);
    case Method::CsLbp: return encode_cslbp(img);
    case Method::Ldp: return encode_ldp(img);
    case Method::Ldn: return encode_ldn(img);
  }
  fail(ErrorCode::UnknownMethod, "unknown descriptor method");
}

CodeMap encode(const GrayImage& img, Method method) { return encode_baseline(img, method); }

GrayImage codemap_to_gray(const CodeMap& codes) {
  const int scale = 255 / (codes.code_count() - 1);
  GrayImage out(codes.width(), codes.height());
  for (std::size_t i = 0; i < codes.codes().size(); ++i) {
    out.pixels()[i] = static_cast<std::uint8_t>(codes.codes()[i] * scale);
  }
  return out;
}

}  // namespace dirpat
