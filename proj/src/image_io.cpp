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

#include <png.h>

#include <cctype>
#include <csetjmp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <string>

#include "dirpat/detail/binary_io.hpp"
#include "dirpat/error.hpp"
#include "dirpat/image.hpp"

namespace dirpat {

namespace {

class PgmScanner {
 public:
  PgmScanner(const std::vector<std::uint8_t>& bytes, const std::string& name)
      : bytes_(bytes), name_(name) {}

  // Header / ASCII token: skips whitespace and '#' comments.
  long next_int() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      fail(ErrorCode::CorruptImage, name_ + ": expected an integer in PGM data");
    }
    long v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_++] - '0');
      if (v > 1'000'000'000L) fail(ErrorCode::CorruptImage, name_ + ": PGM value overflow");
    }
    return v;
  }

  // Exactly one whitespace byte separates the header from a P5 raster.
  void single_space() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      fail(ErrorCode::CorruptImage, name_ + ": malformed PGM header");
    }
    ++pos_;
  }

  std::size_t pos() const noexcept { return pos_; }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  const std::vector<std::uint8_t>& bytes_;
  const std::string& name_;
  std::size_t pos_ = 2;
};

GrayImage decode_pgm(const std::vector<std::uint8_t>& bytes, const std::string& name) {
  const bool binary = bytes[1] == '5';
  PgmScanner scan(bytes, name);
  const long width = scan.next_int();
  const long height = scan.next_int();
  const long maxval = scan.next_int();
  if (width < 1 || height < 1 || width > 65535 || height > 65535) {
    fail(ErrorCode::CorruptImage, name + ": invalid PGM dimensions");
  }
  if (maxval != 255) {
    fail(ErrorCode::UnsupportedFormat,
         name + ": PGM maxval must be 255, got " + std::to_string(maxval));
  }
  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<std::uint8_t> pixels(count);
  if (binary) {
    scan.single_space();
    if (bytes.size() - scan.pos() < count) {
      fail(ErrorCode::CorruptImage, name + ": PGM payload shorter than width x height");
    }
    std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(scan.pos()), count, pixels.begin());
  } else {
    for (auto& p : pixels) {
      const long v = scan.next_int();
      if (v > 255) fail(ErrorCode::CorruptImage, name + ": PGM sample exceeds maxval");
      p = static_cast<std::uint8_t>(v);
    }
  }
  return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

struct PngReadState {
  std::string message;
};

void png_error_handler(png_structp png, png_const_charp msg) {
  auto* state = static_cast<PngReadState*>(png_get_error_ptr(png));
  if (state) state->message = msg;
  png_longjmp(png, 1);
}

void png_warning_handler(png_structp, png_const_charp) {}

struct RawPng {
  png_bytep data = nullptr;
  png_uint_32 width = 0;
  png_uint_32 height = 0;
  std::size_t rowbytes = 0;
  int channels = 0;
  png_bytepp rows = nullptr;  // scratch, freed by read_png_raw
};

// Plain C-style decode: nothing with a destructor may be live across the
// setjmp/longjmp pair. `out->data` is malloc'ed and owned by the caller.
bool read_png_raw(FILE* file, PngReadState* state, RawPng* out) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, state, png_error_handler,
                                           png_warning_handler);
  if (!png) return false;
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    return false;
  }
  // State written after setjmp lives in *out, not in locals.
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    std::free(out->rows);
    out->rows = nullptr;
    std::free(out->data);
    out->data = nullptr;
    return false;
  }

  png_init_io(png, file);
  png_read_info(png, info);
  out->width = png_get_image_width(png, info);
  out->height = png_get_image_height(png, info);
  const int color_type = png_get_color_type(png, info);
  const int bit_depth = png_get_bit_depth(png, info);
  if (out->width > 65535 || out->height > 65535) png_error(png, "image too large");

  if (bit_depth == 16) png_set_strip_16(png);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  png_set_strip_alpha(png);
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  out->channels = png_get_channels(png, info);
  out->rowbytes = png_get_rowbytes(png, info);
  out->data = static_cast<png_bytep>(std::malloc(out->rowbytes * out->height));
  out->rows = static_cast<png_bytepp>(std::malloc(sizeof(png_bytep) * out->height));
  if (!out->data || !out->rows) png_error(png, "out of memory");
  for (png_uint_32 r = 0; r < out->height; ++r) out->rows[r] = out->data + r * out->rowbytes;
  png_read_image(png, out->rows);
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  std::free(out->rows);
  out->rows = nullptr;
  return true;
}

GrayImage decode_png(const std::filesystem::path& path) {
  const std::string name = path.string();
  std::unique_ptr<FILE, int (*)(FILE*)> file(std::fopen(name.c_str(), "rb"), &std::fclose);
  if (!file) fail(ErrorCode::FileNotFound, "cannot open " + name);

  PngReadState state;
  RawPng raw;
  if (!read_png_raw(file.get(), &state, &raw)) {
    fail(ErrorCode::CorruptImage, name + ": " + (state.message.empty() ? "PNG decode failed"
                                                                        : state.message));
  }
  std::unique_ptr<png_byte, void (*)(void*)> owned(raw.data, &std::free);

  GrayImage img(static_cast<int>(raw.width), static_cast<int>(raw.height));
  const auto channels = static_cast<std::size_t>(raw.channels);
  for (png_uint_32 r = 0; r < raw.height; ++r) {
    const std::uint8_t* row = owned.get() + r * raw.rowbytes;
    for (png_uint_32 c = 0; c < raw.width; ++c) {
      const std::uint8_t* px = row + c * channels;
      img.at(static_cast<int>(r), static_cast<int>(c)) =
          channels >= 3 ? luma(px[0], px[1], px[2]) : px[0];
    }
  }
  return img;
}

}  // namespace

GrayImage load_grayscale(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    fail(ErrorCode::FileNotFound, "no such image file: " + path.string());
  }
  const auto bytes = detail::read_file(path);
  static constexpr std::uint8_t kPngSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (bytes.size() >= 8 && std::equal(bytes.begin(), bytes.begin() + 8, kPngSignature)) {
    return decode_png(path);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '5')) {
    return decode_pgm(bytes, path.string());
  }
  fail(ErrorCode::UnsupportedFormat, path.string() + ": not a PGM (P2/P5) or PNG file");
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
  const std::string header =
      "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  bytes.insert(bytes.end(), img.pixels().begin(), img.pixels().end());
  detail::write_file(path, bytes);
}

}  // namespace dirpat
