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

#include <cstdio>
#include <ostream>

#include "dirpat/detail/binary_io.hpp"
#include "dirpat/features.hpp"

namespace dirpat {

namespace {

constexpr std::string_view kFeatureMagic = "DPFV0001";

// Fields are quoted only when they would break the row.
void write_csv_field(std::ostream& out, std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    out << field;
    return;
  }
  out << '"';
  for (char ch : field) {
    if (ch == '"') out << '"';
    out << ch;
  }
  out << '"';
}

}  // namespace

void write_feature_csv_header(std::ostream& out, std::size_t length) {
  out << "id,label,method,grid,norm";
  for (std::size_t i = 0; i < length; ++i) out << ",f" << i;
  out << '\n';
}

void write_feature_csv_row(std::ostream& out, std::string_view id, std::string_view label,
                           const FeatureVector& fv) {
  write_csv_field(out, id);
  out << ',';
  write_csv_field(out, label);
  out << ',' << to_string(fv.meta.method) << ',' << to_string(fv.meta.grid) << ','
      << to_string(fv.meta.norm);
  char buf[32];
  for (double v : fv.values) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << ',' << buf;
  }
  out << '\n';
}

std::vector<std::uint8_t> encode_feature_record(const FeatureVector& fv) {
  detail::ByteWriter w;
  w.raw(kFeatureMagic);
  w.f64_array(fv.values);
  return std::move(w.bytes());
}

std::vector<double> decode_feature_record(std::span<const std::uint8_t> bytes) {
  detail::ByteReader r(bytes, ErrorCode::IoError);
  r.expect_magic(kFeatureMagic);
  return r.f64_array();
}

void write_feature_record(const FeatureVector& fv, const std::filesystem::path& path) {
  detail::write_file(path, encode_feature_record(fv));
}

}  // namespace dirpat
