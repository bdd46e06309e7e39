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

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "dirpat/compass.hpp"
#include "dirpat/detail/binary_io.hpp"
#include "dirpat/encoders.hpp"
#include "oracle/naive.hpp"
#include "support.hpp"

using dirpat::CodeMap;
using dirpat::ErrorCode;
using dirpat::GrayImage;
using dirpat::Method;

namespace {

constexpr std::array<Method, 5> kAllMethods = {Method::Retrain, Method::Lbp, Method::CsLbp, Method::Ldp,
                                               Method::Ldn};

// Strictly increasing intensity map with random steps, built from a seed.
std::array<std::uint8_t, 256> monotone_map(dirpat::detail::Rng& rng, int domain_hi) {
  std::array<std::uint8_t, 256> map{};
  const int slack = 255 - domain_hi;
  int value = static_cast<int>(rng.below(static_cast<std::uint64_t>(slack / 2 + 1)));
  int budget = slack - value;
  for (int v = 0; v <= domain_hi; ++v) {
    map[v] = static_cast<std::uint8_t>(value);
    const int extra = budget > 0 ? static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(budget, 3) + 1))) : 0;
    budget -= extra;
    value += 1 + extra;
  }
  return map;
}

}  // namespace

TEST_CASE("method names and code counts") {
  CHECK(dirpat::code_count(Method::Retrain) == 64);
  CHECK(dirpat::code_count(Method::Lbp) == 256);
  CHECK(dirpat::code_count(Method::CsLbp) == 16);
  CHECK(dirpat::code_count(Method::Ldp) == 56);
  CHECK(dirpat::code_count(Method::Ldn) == 56);
  for (Method m : kAllMethods) CHECK(dirpat::parse_method(dirpat::to_string(m)) == m);
  CHECK(dirpat::parse_method("retrain") == Method::Retrain);
  CHECK(dirpat::parse_method("CS-LBP") == Method::CsLbp);
  CHECK(testing::error_of([] { dirpat::parse_method("LDTP"); }) == ErrorCode::UnknownMethod);
}

TEST_CASE("constant images") {
  const GrayImage flat(8, 7, 90);
  const CodeMap retrain = dirpat::encode_retrain(flat);
  const CodeMap lbp = dirpat::encode_baseline(flat, Method::Lbp);
  const CodeMap cslbp = dirpat::encode_baseline(flat, Method::CsLbp);
  const CodeMap ldp = dirpat::encode_baseline(flat, Method::Ldp);
  const CodeMap ldn = dirpat::encode_baseline(flat, Method::Ldn);
  for (auto v : retrain.codes()) CHECK(v == 0);
  for (auto v : lbp.codes()) CHECK(v == 255);
  for (auto v : cslbp.codes()) CHECK(v == 0);
  for (auto v : ldp.codes()) CHECK(v == 0);
  // All responses tie at 0: maximum 0, minimum among the rest 1.
  for (auto v : ldn.codes()) CHECK(v == dirpat::ldn_dense_code(0, 1));
}

TEST_CASE("vertical step center codes 35") {
  const CodeMap codes = dirpat::encode_retrain(testing::vertical_step());
  CHECK(codes.at(2, 2) == 35);
  CHECK(codes.method() == Method::Retrain);
  CHECK(codes.code_count() == 64);
}

TEST_CASE("retrain matches the naive oracle") {
  dirpat::detail::Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int hi = trial % 4 == 0 ? 3 : 255;
    const GrayImage img = testing::random_image(rng, 8, 8, 0, hi);
    const auto expected = oracle::retrain_codes(img);
    const CodeMap codes = dirpat::encode_retrain(img);
    REQUIRE(codes.codes().size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(codes.codes()[i] == expected[i]);
  }
}

TEST_CASE("retrain equals the composition of the compass operations") {
  dirpat::detail::Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const int w = 5 + static_cast<int>(rng.below(20));
    const int h = 5 + static_cast<int>(rng.below(20));
    const GrayImage img = testing::random_image(rng, w, h);
    const auto stack = dirpat::response_stack(img);
    const CodeMap codes = dirpat::encode_retrain(img);
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) {
        const int expected =
            8 * dirpat::primary_direction(stack, r, c).value() + dirpat::secondary_direction(stack, r, c).value();
        CHECK(codes.at(r, c) == expected);
      }
    }
  }
}

TEST_CASE("lbp matches the naive oracle") {
  dirpat::detail::Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const GrayImage img = testing::random_image(rng, 9, 7, 0, trial % 2 ? 255 : 4);
    const CodeMap codes = dirpat::encode_baseline(img, Method::Lbp);
    for (int r = 0; r < 7; ++r) {
      for (int c = 0; c < 9; ++c) CHECK(codes.at(r, c) == oracle::lbp_code(img, r, c));
    }
  }
}

TEST_CASE("cslbp compares the four center-symmetric pairs") {
  GrayImage img(5, 5, 50);
  img.at(2, 3) = 60;  // E brighter than W
  img.at(1, 3) = 40;  // NE darker than SW
  img.at(1, 2) = 51;  // N one above S
  img.at(1, 1) = 70;  // NW brighter than SE
  const int code = dirpat::encode_baseline(img, Method::CsLbp).at(2, 2);
  CHECK(code == (1 | 4 | 8));
}

TEST_CASE("ldp dense ranks follow lexicographic 3-subsets") {
  std::set<int> seen;
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      for (int c = b + 1; c < 8; ++c) {
        const unsigned word = (1u << a) | (1u << b) | (1u << c);
        const int rank = dirpat::ldp_dense_code(word);
        CHECK(rank == oracle::triple_rank(a, b, c));
        seen.insert(rank);
      }
    }
  }
  CHECK(seen.size() == 56);
  CHECK(*seen.begin() == 0);
  CHECK(*seen.rbegin() == 55);
  CHECK(dirpat::ldp_dense_code(0b111) == 0);
  CHECK(dirpat::ldp_dense_code(0b11) == -1);
  CHECK(dirpat::ldp_dense_code(0b1111) == -1);
}

TEST_CASE("ldp marks the three strongest directions") {
  dirpat::detail::Rng rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    const GrayImage img = testing::random_image(rng, 8, 8, 0, trial % 2 ? 255 : 3);
    const auto stack = dirpat::response_stack(img);
    const CodeMap codes = dirpat::encode_baseline(img, Method::Ldp);
    for (int r = 0; r < 8; ++r) {
      for (int c = 0; c < 8; ++c) {
        std::array<int, 8> idx;
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
          return std::abs(stack.plane(a).at(r, c)) > std::abs(stack.plane(b).at(r, c));
        });
        std::array<int, 3> top = {idx[0], idx[1], idx[2]};
        std::sort(top.begin(), top.end());
        CHECK(codes.at(r, c) == oracle::triple_rank(top[0], top[1], top[2]));
      }
    }
  }
}

TEST_CASE("ldn dense code is a bijection onto 56 codes") {
  std::set<int> seen;
  for (int mx = 0; mx < 8; ++mx) {
    for (int mn = 0; mn < 8; ++mn) {
      if (mn == mx) continue;
      const int code = dirpat::ldn_dense_code(mx, mn);
      CHECK(code >= 0);
      CHECK(code < 56);
      seen.insert(code);
    }
  }
  CHECK(seen.size() == 56);
}

TEST_CASE("ldn picks signed extremes") {
  dirpat::detail::Rng rng(25);
  for (int trial = 0; trial < 10; ++trial) {
    const GrayImage img = testing::random_image(rng, 8, 8);
    const auto stack = dirpat::response_stack(img);
    const CodeMap codes = dirpat::encode_baseline(img, Method::Ldn);
    for (int r = 0; r < 8; ++r) {
      for (int c = 0; c < 8; ++c) {
        int mx = 0;
        for (int k = 1; k < 8; ++k) {
          if (stack.plane(k).at(r, c) > stack.plane(mx).at(r, c)) mx = k;
        }
        int mn = -1;
        for (int k = 0; k < 8; ++k) {
          if (k == mx) continue;
          if (mn < 0 || stack.plane(k).at(r, c) < stack.plane(mn).at(r, c)) mn = k;
        }
        CHECK(codes.at(r, c) == dirpat::ldn_dense_code(mx, mn));
      }
    }
  }
}

TEST_CASE("codes stay below code_count and dimensions match") {
  dirpat::detail::Rng rng(26);
  for (int trial = 0; trial < 20; ++trial) {
    const int w = 5 + static_cast<int>(rng.below(30));
    const int h = 5 + static_cast<int>(rng.below(30));
    const GrayImage img = testing::random_image(rng, w, h);
    for (Method m : kAllMethods) {
      const CodeMap codes = dirpat::encode(img, m);
      CHECK(codes.width() == w);
      CHECK(codes.height() == h);
      CHECK(codes.method() == m);
      for (auto v : codes.codes()) CHECK(v < codes.code_count());
    }
  }
}

TEST_CASE("gain and offset invariance of compass-based codes") {
  dirpat::detail::Rng rng(27);
  for (int trial = 0; trial < 20; ++trial) {
    const int a = 1 + static_cast<int>(rng.below(3));
    const int b = static_cast<int>(rng.below(40));
    const GrayImage img = testing::random_image(rng, 12, 10, 0, (255 - b) / a);
    GrayImage mapped = img;
    for (auto& p : mapped.pixels()) p = static_cast<std::uint8_t>(a * p + b);
    for (Method m : {Method::Retrain, Method::Ldp, Method::Ldn}) CHECK(dirpat::encode(img, m) == dirpat::encode(mapped, m));
  }
}

TEST_CASE("monotone remap invariance of lbp and cslbp") {
  dirpat::detail::Rng rng(28);
  for (int trial = 0; trial < 20; ++trial) {
    const int hi = 60 + static_cast<int>(rng.below(60));
    const GrayImage img = testing::random_image(rng, 12, 10, 0, hi);
    const auto map = monotone_map(rng, hi);
    GrayImage mapped = img;
    for (auto& p : mapped.pixels()) p = map[p];
    for (Method m : {Method::Lbp, Method::CsLbp}) CHECK(dirpat::encode(img, m) == dirpat::encode(mapped, m));
  }
}

TEST_CASE("encoders reject images below 5x5") {
  for (Method m : kAllMethods) {
    CHECK(testing::error_of([&] { dirpat::encode(GrayImage(4, 8), m); }) == ErrorCode::ImageTooSmall);
    CHECK(testing::error_of([&] { dirpat::encode(GrayImage(8, 4), m); }) == ErrorCode::ImageTooSmall);
  }
  CHECK(dirpat::encode(GrayImage(5, 5), Method::Retrain).codes().size() == 25);
}

TEST_CASE("code map files round trip") {
  testing::TempDir dir("codemap");
  dirpat::detail::Rng rng(29);
  const GrayImage img = testing::random_image(rng, 11, 6);
  for (Method m : kAllMethods) {
    const CodeMap codes = dirpat::encode(img, m);
    const auto path = dir / (std::string(dirpat::to_string(m)) + ".dpcm");
    dirpat::write_codemap(codes, path);
    CHECK(dirpat::read_codemap(path) == codes);
  }
  const auto bytes = dirpat::detail::read_file(dir / "RETRAIN.dpcm");
  CHECK(bytes.size() == 8 + 16 + 66);
  CHECK(std::string(bytes.begin(), bytes.begin() + 8) == "DPCM0001");
}

TEST_CASE("corrupt code map files are rejected") {
  testing::TempDir dir("codemap");
  dirpat::detail::write_text_file(dir / "bad.dpcm", "DPCM9999garbage");
  CHECK_THROWS_AS(dirpat::read_codemap(dir / "bad.dpcm"), dirpat::Error);

  const CodeMap codes = dirpat::encode(GrayImage(5, 5, 3), Method::CsLbp);
  dirpat::write_codemap(codes, dir / "ok.dpcm");
  auto bytes = dirpat::detail::read_file(dir / "ok.dpcm");
  bytes.back() = 200;
  dirpat::detail::write_file(dir / "range.dpcm", bytes);
  CHECK(testing::error_of([&] { dirpat::read_codemap(dir / "range.dpcm"); }) == ErrorCode::CorruptImage);
  bytes.pop_back();
  dirpat::detail::write_file(dir / "short.dpcm", bytes);
  CHECK_THROWS_AS(dirpat::read_codemap(dir / "short.dpcm"), dirpat::Error);
}

TEST_CASE("visualization scales codes by floor(255 / (count - 1))") {
  CodeMap codes(4, 1, Method::Retrain);
  codes.at(0, 0) = 0;
  codes.at(0, 1) = 1;
  codes.at(0, 2) = 35;
  codes.at(0, 3) = 63;
  const GrayImage g = dirpat::codemap_to_gray(codes);
  CHECK(g.at(0, 0) == 0);
  CHECK(g.at(0, 1) == 4);
  CHECK(g.at(0, 2) == 140);
  CHECK(g.at(0, 3) == 252);

  CodeMap lbp(1, 1, Method::Lbp);
  lbp.at(0, 0) = 255;
  CHECK(dirpat::codemap_to_gray(lbp).at(0, 0) == 255);
  CodeMap cs(1, 1, Method::CsLbp);
  cs.at(0, 0) = 15;
  CHECK(dirpat::codemap_to_gray(cs).at(0, 0) == 255);
}
