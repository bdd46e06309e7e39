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

#include <string>

#include "dirpat/detail/binary_io.hpp"
#include "dirpat/encoders.hpp"
#include "dirpat/error.hpp"

namespace dirpat {

namespace {
constexpr std::string_view kCodeMapMagic = "DPCM0001";
}

void write_codemap(const CodeMap& codes, const std::filesystem::path& path) {
  detail::ByteWriter w;
  w.raw(kCodeMapMagic);
  w.u32(static_cast<std::uint32_t>(codes.width()));
  w.u32(static_cast<std::uint32_t>(codes.height()));
  w.u32(static_cast<std::uint32_t>(codes.method()));
  w.u32(static_cast<std::uint32_t>(codes.code_count()));
  auto& bytes = w.bytes();
  bytes.insert(bytes.end(), codes.codes().begin(), codes.codes().end());
  detail::write_file(path, bytes);
}

CodeMap read_codemap(const std::filesystem::path& path) {
  const auto bytes = detail::read_file(path);
  detail::ByteReader r(bytes, ErrorCode::CorruptImage);
  r.expect_magic(kCodeMapMagic);
  const auto width = r.u32();
  const auto height = r.u32();
  const auto method = r.u32();
  const auto count = r.u32();
  if (method > static_cast<std::uint32_t>(Method::Ldn)) {
    fail(ErrorCode::UnknownMethod, path.string() + ": unknown method id " + std::to_string(method));
  }
  if (width < 1 || height < 1 || width > 65535 || height > 65535) {
    fail(ErrorCode::CorruptImage, path.string() + ": invalid code map dimensions");
  }
  CodeMap codes(static_cast<int>(width), static_cast<int>(height), static_cast<Method>(method));
  if (static_cast<int>(count) != codes.code_count()) {
    fail(ErrorCode::CorruptImage, path.string() + ": code_count does not match method");
  }
  const auto payload = r.take(codes.codes().size());
  std::copy(payload.begin(), payload.end(), codes.codes().begin());
  for (auto v : codes.codes()) {
    if (v >= count) fail(ErrorCode::CorruptImage, path.string() + ": code out of range");
  }
  return codes;
}

}  // namespace dirpat
