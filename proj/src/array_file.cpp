// Copyright 2026 The SRTGAN Authors. All Rights Reserved.
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

#include "srtgan/array_file.h"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "srtgan/error.h"

namespace srtgan {

namespace {

constexpr char kMagic[8] = {'S', 'R', 'T', 'G', 'A', 'N', 'v', '1'};

void write_u32(std::ostream& os, uint32_t v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void write_str(std::ostream& os, const std::string& s) {
  write_u32(os, uint32_t(s.size()));
  os.write(s.data(), std::streamsize(s.size()));
}

uint32_t read_u32(std::istream& is, const std::string& path) {
  uint32_t v = 0;
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  SRTGAN_CHECK(is.good(), "array file: truncated: ", path);
  return v;
}

std::string read_str(std::istream& is, const std::string& path) {
  const uint32_t n = read_u32(is, path);
  SRTGAN_CHECK(n <= (1u << 24), "array file: implausible string length in ", path);
  std::string s(n, '\0');
  is.read(s.data(), n);
  SRTGAN_CHECK(is.good(), "array file: truncated: ", path);
  return s;
}

template <typename T>
void write_array(std::ostream& os, const std::string& name,
                 const nn::Tensor<T>& t, uint8_t dtype) {
  write_str(os, name);
  os.write(reinterpret_cast<const char*>(&dtype), 1);
  write_u32(os, uint32_t(t.shape.size()));
  for (int d : t.shape) {
    const int32_t v = d;
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
  }
  os.write(reinterpret_cast<const char*>(t.data.data()),
           std::streamsize(t.data.size() * sizeof(T)));
}

template <typename T>
nn::Tensor<T> read_array_body(std::istream& is, const std::string& path) {
  const uint32_t ndim = read_u32(is, path);
  SRTGAN_CHECK(ndim <= 8, "array file: implausible rank in ", path);
  std::vector<int> shape(ndim);
  for (auto& d : shape) {
    int32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    SRTGAN_CHECK(is.good() && v >= 0, "array file: bad dimension in ", path);
    d = v;
  }
  nn::Tensor<T> t(shape);
  is.read(reinterpret_cast<char*>(t.data.data()),
          std::streamsize(t.data.size() * sizeof(T)));
  SRTGAN_CHECK(is.good(), "array file: truncated array data: ", path);
  return t;
}

}  // namespace

void ArrayFile::save(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  SRTGAN_CHECK(os.good(), "array file: cannot write: ", path);
  os.write(kMagic, sizeof kMagic);
  write_u32(os, uint32_t(meta.size()));
  for (const auto& [k, v] : meta) {
    write_str(os, k);
    write_str(os, v);
  }
  write_u32(os, uint32_t(f32.size() + f64.size()));
  for (const auto& [name, t] : f32) write_array(os, name, t, 0);
  for (const auto& [name, t] : f64) write_array(os, name, t, 1);
  SRTGAN_CHECK(os.good(), "array file: write failed: ", path);
}

ArrayFile ArrayFile::load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  SRTGAN_CHECK(is.good(), "array file: cannot open: ", path);
  char magic[8];
  is.read(magic, sizeof magic);
  SRTGAN_CHECK(is.good() && std::memcmp(magic, kMagic, sizeof kMagic) == 0,
               "array file: bad magic (not a SRTGANv1 container): ", path);
  ArrayFile out;
  const uint32_t n_meta = read_u32(is, path);
  SRTGAN_CHECK(n_meta <= (1u << 20), "array file: implausible meta count in ", path);
  for (uint32_t i = 0; i < n_meta; ++i) {
    std::string k = read_str(is, path);
    out.meta[k] = read_str(is, path);
  }
  const uint32_t n_arrays = read_u32(is, path);
  SRTGAN_CHECK(n_arrays <= (1u << 20), "array file: implausible array count in ",
               path);
  for (uint32_t i = 0; i < n_arrays; ++i) {
    std::string name = read_str(is, path);
    uint8_t dtype = 0;
    is.read(reinterpret_cast<char*>(&dtype), 1);
    SRTGAN_CHECK(is.good(), "array file: truncated: ", path);
    if (dtype == 0) {
      out.f32[name] = read_array_body<float>(is, path);
    } else if (dtype == 1) {
      out.f64[name] = read_array_body<double>(is, path);
    } else {
      fail("array file: unknown dtype ", int(dtype), " for '", name, "' in ", path);
    }
  }
  return out;
}

const nn::Tensor<float>& ArrayFile::get_f32(const std::string& name) const {
  auto it = f32.find(name);
  SRTGAN_CHECK(it != f32.end(), "array file: missing array '", name, "'");
  return it->second;
}

const std::string& ArrayFile::get_meta(const std::string& key) const {
  auto it = meta.find(key);
  SRTGAN_CHECK(it != meta.end(), "array file: missing meta '", key, "'");
  return it->second;
}

}  // namespace srtgan
