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

#include "srtgan/augment.h"

#include "srtgan/error.h"

namespace srtgan {

template <typename T>
nn::Tensor<T> hflip(const nn::Tensor<T>& img) {
  SRTGAN_CHECK(img.ndim() == 4, "hflip: expected [N,C,H,W], got ", img.shape_str());
  const int N = img.shape[0], C = img.shape[1], H = img.shape[2], W = img.shape[3];
  nn::Tensor<T> out(img.shape);
  for (int n = 0; n < N; ++n)
    for (int c = 0; c < C; ++c)
      for (int y = 0; y < H; ++y) {
        const T* src = img.data.data() + ((int64_t(n) * C + c) * H + y) * W;
        T* dst = out.data.data() + ((int64_t(n) * C + c) * H + y) * W;
        for (int x = 0; x < W; ++x) dst[x] = src[W - 1 - x];
      }
  return out;
}

template <typename T>
nn::Tensor<T> rot90(const nn::Tensor<T>& img) {
  SRTGAN_CHECK(img.ndim() == 4, "rot90: expected [N,C,H,W], got ", img.shape_str());
  const int N = img.shape[0], C = img.shape[1], H = img.shape[2], W = img.shape[3];
  nn::Tensor<T> out({N, C, W, H});
  // Clockwise: output row y' = x, output col x' = H-1-y.
  for (int n = 0; n < N; ++n)
    for (int c = 0; c < C; ++c)
      for (int y = 0; y < H; ++y)
        for (int x = 0; x < W; ++x)
          out.at4(n, c, x, H - 1 - y) = img.at4(n, c, y, x);
  return out;
}

template <typename T>
nn::Tensor<T> crop(const nn::Tensor<T>& img, int y, int x, int h, int w) {
  SRTGAN_CHECK(img.ndim() == 4, "crop: expected [N,C,H,W], got ", img.shape_str());
  const int N = img.shape[0], C = img.shape[1], H = img.shape[2], W = img.shape[3];
  SRTGAN_CHECK(h >= 1 && w >= 1 && y >= 0 && x >= 0 && y + h <= H && x + w <= W,
               "crop: window ", h, "x", w, " at (", y, ",", x,
               ") does not fit inside ", img.shape_str());
  nn::Tensor<T> out({N, C, h, w});
  for (int n = 0; n < N; ++n)
    for (int c = 0; c < C; ++c)
      for (int yy = 0; yy < h; ++yy) {
        const T* src = img.data.data() + ((int64_t(n) * C + c) * H + y + yy) * W + x;
        T* dst = out.data.data() + ((int64_t(n) * C + c) * h + yy) * w;
        for (int xx = 0; xx < w; ++xx) dst[xx] = src[xx];
      }
  return out;
}

ImagePair augment(const ImagePair& pair, const AugmentationSpec& spec, nn::Rng& rng) {
  check_pair(pair);
  SRTGAN_CHECK(spec.rotation == 0 || spec.rotation == 90,
               "augment: rotation must be 0 or 90 degrees, got ", spec.rotation);
  ImagePair out;
  out.scale = pair.scale;
  out.identifier = pair.identifier;
  out.lr = spec.hflip ? hflip(pair.lr) : pair.lr;
  out.hr = spec.hflip ? hflip(pair.hr) : pair.hr;
  if (spec.rotation == 90) {
    out.lr = rot90(out.lr);
    out.hr = rot90(out.hr);
  }
  if (spec.crop_lr > 0) {
    const int s = spec.crop_lr;
    const int H = out.lr.shape[2], W = out.lr.shape[3];
    SRTGAN_CHECK(s <= H && s <= W, "augment: crop ", s, " exceeds LR dims ", H,
                 "x", W, " for '", pair.identifier, "'");
    int y, x;
    if (spec.crop_policy == CropPolicy::kRandom) {
      y = int(rng.uniform_int(H - s + 1));
      x = int(rng.uniform_int(W - s + 1));
    } else {
      y = (H - s) / 2;
      x = (W - s) / 2;
    }
    out.lr = crop(out.lr, y, x, s, s);
    out.hr = crop(out.hr, pair.scale * y, pair.scale * x, pair.scale * s,
                  pair.scale * s);
  }
  check_pair(out);
  return out;
}

AugmentationSpec sample_augmentation(nn::Rng& rng, int crop_lr) {
  AugmentationSpec spec;
  spec.hflip = rng.bernoulli(0.5);
  spec.rotation = rng.bernoulli(0.5) ? 90 : 0;
  spec.crop_lr = crop_lr;
  spec.crop_policy = CropPolicy::kRandom;
  return spec;
}

template nn::Tensor<float> hflip(const nn::Tensor<float>&);
template nn::Tensor<double> hflip(const nn::Tensor<double>&);
template nn::Tensor<float> rot90(const nn::Tensor<float>&);
template nn::Tensor<double> rot90(const nn::Tensor<double>&);
template nn::Tensor<float> crop(const nn::Tensor<float>&, int, int, int, int);
template nn::Tensor<double> crop(const nn::Tensor<double>&, int, int, int, int);

}  // namespace srtgan
