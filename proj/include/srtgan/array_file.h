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

#ifndef SRTGAN_ARRAY_FILE_H_
#define SRTGAN_ARRAY_FILE_H_

#include <map>
#include <string>

#include "srtgan/nn/tensor.h"

namespace srtgan {

// Named-array binary container used for checkpoints and weight artifacts.
//
// Layout (little-endian):
//   magic "SRTGANv1"                      8 bytes
//   meta count                            u32
//     { key len u32, key bytes, value len u32, value bytes } per entry
//   array count                           u32
//     { name len u32, name bytes, dtype u8 (0 = f32, 1 = f64),
//       ndim u32, dims i32 each, raw data } per entry
//
// Maps are ordered, so save/load round-trips are byte-identical.
struct ArrayFile {
  std::map<std::string, std::string> meta;
  std::map<std::string, nn::Tensor<float>> f32;
  std::map<std::string, nn::Tensor<double>> f64;

  void save(const std::string& path) const;
  static ArrayFile load(const std::string& path);

  const nn::Tensor<float>& get_f32(const std::string& name) const;
  const std::string& get_meta(const std::string& key) const;
};

}  // namespace srtgan

#endif  // SRTGAN_ARRAY_FILE_H_
