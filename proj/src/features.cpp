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

#include "dirpat/features.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "dirpat/error.hpp"

namespace dirpat {

RegionGrid parse_grid(std::string_view text) {
  const auto x = text.find_first_of("xX");
  RegionGrid grid{0, 0};
  if (x != std::string_view::npos) {
    const auto rows = text.substr(0, x);
    const auto cols = text.substr(x + 1);
    const auto r1 = std::from_chars(rows.data(), rows.data() + rows.size(), grid.rows);
    const auto r2 = std::from_chars(cols.data(), cols.data() + cols.size(), grid.cols);
    if (r1.ec == std::errc{} && r1.ptr == rows.data() + rows.size() && r2.ec == std::errc{} &&
        r2.ptr == cols.data() + cols.size() && grid.rows >= 1 && grid.cols >= 1) {
      return grid;
    }
  }
  fail(ErrorCode::InvalidArgument,
       "grid must look like ROWSxCOLS with positive counts, got '" + std::string(text) + "'");
}

std::string to_string(const RegionGrid& grid) {
  return std::to_string(grid.rows) + "x" + std::to_string(grid.cols);
}

std::string_view to_string(Normalization norm) noexcept {
  return norm == Normalization::L1 ? "L1" : "RAW";
}

Normalization parse_normalization(std::string_view text) {
  std::string upper(text);
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (upper == "RAW") return Normalization::Raw;
  if (upper == "L1") return Normalization::L1;
  fail(ErrorCode::InvalidArgument, "normalization must be RAW or L1, got '" + std::string(text) + "'");
}

FeatureVector region_histograms(const CodeMap& codes, const RegionGrid& grid, Normalization norm) {
  if (grid.rows < 1 || grid.cols < 1 || grid.rows > codes.height() || grid.cols > codes.width()) {
    fail(ErrorCode::GridTooFine, "grid " + to_string(grid) + " leaves empty regions on a " +
                                     std::to_string(codes.width()) + "x" +
                                     std::to_string(codes.height()) + " code map");
  }
  FeatureVector fv;
  fv.meta = {codes.method(), grid, norm, codes.code_count()};
  const auto bins = static_cast<std::size_t>(codes.code_count());
  fv.values.assign(fv.meta.length(), 0.0);

  for (int gr = 0; gr < grid.rows; ++gr) {
    const int r0 = band_start(gr, codes.height(), grid.rows);
    const int r1 = band_start(gr + 1, codes.height(), grid.rows);
    for (int gc = 0; gc < grid.cols; ++gc) {
      const int c0 = band_start(gc, codes.width(), grid.cols);
      const int c1 = band_start(gc + 1, codes.width(), grid.cols);
      double* hist = fv.values.data() + static_cast<std::size_t>(gr * grid.cols + gc) * bins;
      for (int r = r0; r < r1; ++r) {
        for (int c = c0; c < c1; ++c) hist[codes.at(r, c)] += 1.0;
      }
      if (norm == Normalization::L1) {
        const double count = static_cast<double>(r1 - r0) * static_cast<double>(c1 - c0);
        for (std::size_t b = 0; b < bins; ++b) hist[b] /= count;
      }
    }
  }
  return fv;
}

}  // namespace dirpat
