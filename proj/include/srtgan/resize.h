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

#ifndef SRTGAN_RESIZE_H_
#define SRTGAN_RESIZE_H_

#include "srtgan/nn/tensor.h"

namespace srtgan {

// Separable bicubic resampling (kernel a = -0.5) following the convention of
// mainstream reference resamplers: half-pixel centers, kernel widened by the
// scale factor when downsampling (antialiasing), and border windows clipped
// with weight renormalization. Output is clamped to [0,1]. Works on any
// [N,C,H,W] tensor.
template <typename T>
nn::Tensor<T> bicubic_resize_to(const nn::Tensor<T>& img, int out_h, int out_w);

// Output dims = round(factor * input dims).
template <typename T>
nn::Tensor<T> bicubic_resize(const nn::Tensor<T>& img, double factor);

extern template nn::Tensor<float> bicubic_resize_to(const nn::Tensor<float>&, int, int);
extern template nn::Tensor<double> bicubic_resize_to(const nn::Tensor<double>&, int, int);
extern template nn::Tensor<float> bicubic_resize(const nn::Tensor<float>&, double);
extern template nn::Tensor<double> bicubic_resize(const nn::Tensor<double>&, double);

}  // namespace srtgan

#endif  // SRTGAN_RESIZE_H_
