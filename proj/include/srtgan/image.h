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

#ifndef SRTGAN_IMAGE_H_
#define SRTGAN_IMAGE_H_

#include <string>

#include "srtgan/nn/tensor.h"

namespace srtgan {

// Images are [1,3,H,W] float tensors in [0,1], RGB channel order.

// Loads an 8- or 16-bit RGB PNG or JPEG. Anything else (missing file,
// undecodable data, grayscale, alpha) raises; no silent conversion.
nn::Tensor<float> load_image(const std::string& path);

// Writes an 8-bit RGB PNG; values are clamped to [0,1] then rounded.
void save_image_png(const std::string& path, const nn::Tensor<float>& img);

// Validates the [1,3,H,W] layout and the value-range invariant.
void check_image(const nn::Tensor<float>& img, const char* what);

struct ImagePair {
  nn::Tensor<float> lr;  // [1,3,h,w]
  nn::Tensor<float> hr;  // [1,3,scale*h,scale*w]
  int scale = 4;
  std::string identifier;
};

// Enforces the exact scale relation between the members.
void check_pair(const ImagePair& pair);

}  // namespace srtgan

#endif  // SRTGAN_IMAGE_H_
