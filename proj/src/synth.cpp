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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "dirpat/detail/rng.hpp"
#include "dirpat/error.hpp"
#include "dirpat/evaluation.hpp"

namespace dirpat {

GrayImage synth_grating(int size, double orientation_rad, double phase, double noise_sigma,
                        std::uint64_t noise_seed) {
  GrayImage img(size, size);
  detail::Rng rng(noise_seed);
  // Stripes run along the orientation; intensity varies across it.
  const double nx = -std::sin(orientation_rad);
  const double ny = std::cos(orientation_rad);
  const double k = 2.0 * std::numbers::pi / kSynthPeriod;
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      const double x = c;
      const double y = -r;  // up is positive so angles run counter-clockwise on screen
      double v = 128.0 + kSynthAmplitude * std::sin(k * (nx * x + ny * y) + phase);
      v += noise_sigma * rng.normal();
      img.at(r, c) = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
    }
  }
  return img;
}

Dataset synth_dataset(const SynthConfig& config, const std::filesystem::path& out_dir) {
  if (config.classes < 2 || config.classes > 8) {
    fail(ErrorCode::InvalidArgument, "synthetic classes must be in [2, 8]");
  }
  if (config.per_class < 1) fail(ErrorCode::InvalidArgument, "per-class count must be positive");
  if (config.size < 16) fail(ErrorCode::InvalidArgument, "synthetic image size must be >= 16");

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) fail(ErrorCode::IoError, "cannot create " + out_dir.string() + ": " + ec.message());

  Dataset ds;
  detail::Rng rng(config.seed);
  for (int k = 0; k < config.classes; ++k) {
    ds.class_names.push_back("class_" + std::to_string(k));
    const auto dir = out_dir / ds.class_names.back();
    std::filesystem::create_directories(dir, ec);
    if (ec) fail(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
  }
  for (int k = 0; k < config.classes; ++k) {
    const double theta = std::numbers::pi * k / config.classes;
    for (int n = 0; n < config.per_class; ++n) {
      const double phase = 2.0 * std::numbers::pi * rng.uniform();
      const std::uint64_t noise_seed = rng.next();
      const GrayImage img = synth_grating(config.size, theta, phase, kSynthNoiseSigma, noise_seed);
      char name[32];
      std::snprintf(name, sizeof name, "sample_%04d.pgm", n);
      Sample s;
      s.path = out_dir / ds.class_names[static_cast<std::size_t>(k)] / name;
      s.label = k;
      write_pgm(img, s.path);
      ds.samples.push_back(std::move(s));
    }
  }
  write_manifest(ds, out_dir / "manifest.csv");
  return ds;
}

}  // namespace dirpat
