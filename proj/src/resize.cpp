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

#include "srtgan/resize.h"

#include <cmath>
#include <vector>

#include "srtgan/error.h"

namespace srtgan {

namespace {

double bicubic_kernel(double x) {
  constexpr double a = -0.5;
  x = std::abs(x);
  if (x < 1.0) return ((a + 2.0) * x - (a + 3.0)) * x * x + 1.0;
  if (x < 2.0) return (((x - 5.0) * x + 8.0) * x - 4.0) * a;
  return 0.0;
}

struct ResampleAxis {
  int ksize = 0;
  std::vector<int> first;           // per output index: first source index
  std::vector<int> count;           // per output index: window length
  std::vector<double> weights;      // out_size * ksize, normalized
};

// Half-pixel mapping with the kernel stretched by the scale factor on
// downscale; windows clipped at the borders and renormalized.
ResampleAxis precompute_axis(int in_size, int out_size) {
  const double scale = double(in_size) / double(out_size);
  const double filterscale = scale < 1.0 ? 1.0 : scale;
  const double support = 2.0 * filterscale;
  ResampleAxis ax;
  ax.ksize = int(std::ceil(support)) * 2 + 1;
  ax.first.resize(out_size);
  ax.count.resize(out_size);
  ax.weights.assign(size_t(out_size) * ax.ksize, 0.0);
  const double inv = 1.0 / filterscale;
  for (int xx = 0; xx < out_size; ++xx) {
    const double center = (xx + 0.5) * scale;
    int xmin = int(center - support + 0.5);
    if (xmin < 0) xmin = 0;
    int xmax = int(center + support + 0.5);
    if (xmax > in_size) xmax = in_size;
    const int n = xmax - xmin;
    double* k = &ax.weights[size_t(xx) * ax.ksize];
    double total = 0.0;
    for (int x = 0; x < n; ++x) {
      k[x] = bicubic_kernel((x + xmin - center + 0.5) * inv);
      total += k[x];
    }
    if (total != 0.0) {
      for (int x = 0; x < n; ++x) k[x] /= total;
    }
    ax.first[xx] = xmin;
    ax.count[xx] = n;
  }
  return ax;
}

}  // namespace

template <typename T>
nn::Tensor<T> bicubic_resize_to(const nn::Tensor<T>& img, int out_h, int out_w) {
  SRTGAN_CHECK(img.ndim() == 4, "bicubic_resize: expected [N,C,H,W], got ",
               img.shape_str());
  const int N = img.shape[0], C = img.shape[1];
  const int H = img.shape[2], W = img.shape[3];
  SRTGAN_CHECK(H >= 1 && W >= 1, "bicubic_resize: empty input ", img.shape_str());
  SRTGAN_CHECK(out_h >= 1 && out_w >= 1, "bicubic_resize: output dims must be >= 1, got ",
               out_h, "x", out_w);

  const ResampleAxis hax = precompute_axis(W, out_w);
  const ResampleAxis vax = precompute_axis(H, out_h);

  // Horizontal pass, then vertical; intermediate values stay unclamped.
  nn::Tensor<T> tmp({N, C, H, out_w});
  for (int n = 0; n < N; ++n)
    for (int c = 0; c < C; ++c)
      for (int y = 0; y < H; ++y) {
        const T* src = img.data.data() + ((int64_t(n) * C + c) * H + y) * W;
        T* dst = tmp.data.data() + ((int64_t(n) * C + c) * H + y) * out_w;
        for (int xx = 0; xx < out_w; ++xx) {
          const double* k = &hax.weights[size_t(xx) * hax.ksize];
          double acc = 0.0;
          for (int i = 0; i < hax.count[xx]; ++i)
            acc += double(src[hax.first[xx] + i]) * k[i];
          dst[xx] = T(acc);
        }
      }

  nn::Tensor<T> out({N, C, out_h, out_w});
  for (int n = 0; n < N; ++n)
    for (int c = 0; c < C; ++c) {
      const T* plane = tmp.data.data() + (int64_t(n) * C + c) * H * out_w;
      T* dplane = out.data.data() + (int64_t(n) * C + c) * out_h * out_w;
      for (int yy = 0; yy < out_h; ++yy) {
        const double* k = &vax.weights[size_t(yy) * vax.ksize];
        for (int xx = 0; xx < out_w; ++xx) {
          double acc = 0.0;
          for (int i = 0; i < vax.count[yy]; ++i)
            acc += double(plane[int64_t(vax.first[yy] + i) * out_w + xx]) * k[i];
          double v = acc;
          if (v < 0.0) v = 0.0;
          if (v > 1.0) v = 1.0;
          dplane[int64_t(yy) * out_w + xx] = T(v);
        }
      }
    }
  return out;
}

template <typename T>
nn::Tensor<T> bicubic_resize(const nn::Tensor<T>& img, double factor) {
  SRTGAN_CHECK(std::isfinite(factor) && factor > 0.0,
               "bicubic_resize: factor must be positive, got ", factor);
  SRTGAN_CHECK(img.ndim() == 4, "bicubic_resize: expected [N,C,H,W], got ",
               img.shape_str());
  const int out_h = int(std::llround(factor * img.shape[2]));
  const int out_w = int(std::llround(factor * img.shape[3]));
  SRTGAN_CHECK(out_h >= 1 && out_w >= 1, "bicubic_resize: factor ", factor,
               " collapses ", img.shape_str(), " to zero size");
  return bicubic_resize_to(img, out_h, out_w);
}

template nn::Tensor<float> bicubic_resize_to(const nn::Tensor<float>&, int, int);
template nn::Tensor<double> bicubic_resize_to(const nn::Tensor<double>&, int, int);
template nn::Tensor<float> bicubic_resize(const nn::Tensor<float>&, double);
template nn::Tensor<double> bicubic_resize(const nn::Tensor<double>&, double);

}  // namespace srtgan
