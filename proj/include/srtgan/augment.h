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

#ifndef SRTGAN_AUGMENT_H_
#define SRTGAN_AUGMENT_H_

#include "srtgan/image.h"
#include "srtgan/nn/rng.h"

namespace srtgan {

enum class CropPolicy { kRandom, kCenter };

struct AugmentationSpec {
  bool hflip = false;
  int rotation = 0;  // degrees, 0 or 90 only
  int crop_lr = 0;   // LR crop size in pixels; 0 disables cropping
  CropPolicy crop_policy = CropPolicy::kCenter;
};

// Geometric primitives on [N,C,H,W] tensors.
template <typename T> nn::Tensor<T> hflip(const nn::Tensor<T>& img);
template <typename T> nn::Tensor<T> rot90(const nn::Tensor<T>& img);  // clockwise
template <typename T>
nn::Tensor<T> crop(const nn::Tensor<T>& img, int y, int x, int h, int w);

// Applies flip, then rotation, then crop, identically to both members; the
// HR crop window is scale x the LR window. rng is consumed only for random
// crop offsets, so results are a pure function of (pair, spec, rng state).
ImagePair augment(const ImagePair& pair, const AugmentationSpec& spec, nn::Rng& rng);

// Draws the per-sample augmentation used during training: fair coin for
// hflip, fair coin for 0/90 rotation, random crop of the given size.
AugmentationSpec sample_augmentation(nn::Rng& rng, int crop_lr);

extern template nn::Tensor<float> hflip(const nn::Tensor<float>&);
extern template nn::Tensor<double> hflip(const nn::Tensor<double>&);
extern template nn::Tensor<float> rot90(const nn::Tensor<float>&);
extern template nn::Tensor<double> rot90(const nn::Tensor<double>&);
extern template nn::Tensor<float> crop(const nn::Tensor<float>&, int, int, int, int);
extern template nn::Tensor<double> crop(const nn::Tensor<double>&, int, int, int, int);

}  // namespace srtgan

#endif  // SRTGAN_AUGMENT_H_
