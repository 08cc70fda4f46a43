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

#ifndef SRTGAN_NN_OPS_H_
#define SRTGAN_NN_OPS_H_

#include <vector>

#include "srtgan/nn/autograd.h"
#include "srtgan/nn/rng.h"

namespace srtgan {
namespace nn {

// All spatial ops take NCHW tensors. Every op is differentiable through
// backward() unless noted.

inline int conv_out_size(int in, int kernel, int stride, int pad) {
  return (in + 2 * pad - kernel) / stride + 1;
}

// Elementwise over equal shapes.
template <typename T> Var<T> add(const Var<T>& a, const Var<T>& b);
template <typename T> Var<T> sub(const Var<T>& a, const Var<T>& b);
template <typename T> Var<T> mul(const Var<T>& a, const Var<T>& b);

// y = scale * x + shift.
template <typename T> Var<T> affine(const Var<T>& x, T scale, T shift);

template <typename T> Var<T> abs_val(const Var<T>& x);
template <typename T> Var<T> square(const Var<T>& x);
template <typename T> Var<T> relu(const Var<T>& x);
template <typename T> Var<T> leaky_relu(const Var<T>& x, T slope);
template <typename T> Var<T> sigmoid(const Var<T>& x);

// Scalar [1] outputs.
template <typename T> Var<T> mean_all(const Var<T>& x);
// Weighted sum of scalar inputs: sum_i coeffs[i] * xs[i].
template <typename T>
Var<T> weighted_sum(const std::vector<Var<T>>& xs, const std::vector<T>& coeffs);

template <typename T> Var<T> reshape(const Var<T>& x, std::vector<int> shape);

// x: [N,IC,H,W], weight: [OC,IC,K,K], bias: [OC]. Cross-correlation with
// zero padding, as usual for learned convs.
template <typename T>
Var<T> conv2d(const Var<T>& x, const Var<T>& weight, const Var<T>& bias,
              int stride, int pad);

// x: [N,K], weight: [M,K], bias: [M] -> [N,M].
template <typename T>
Var<T> linear(const Var<T>& x, const Var<T>& weight, const Var<T>& bias);

// Batch normalization over N,H,W per channel. In training mode statistics
// come from the batch; running statistics are updated only when
// update_running is set (a separate switch so loss evaluations stay pure).
template <typename T>
Var<T> batch_norm2d(const Var<T>& x, const Var<T>& gamma, const Var<T>& beta,
                    Tensor<T>* running_mean, Tensor<T>* running_var,
                    bool training, bool update_running, T momentum, T eps);

template <typename T> Var<T> maxpool2x2(const Var<T>& x);
template <typename T> Var<T> nearest_upsample2x(const Var<T>& x);
template <typename T> Var<T> global_avg_pool(const Var<T>& x);  // -> [N,C,1,1]

// out[n,c,:,:] = x[n,c,:,:] * gate[n,c,0,0].
template <typename T> Var<T> scale_channels(const Var<T>& x, const Var<T>& gate);

// Unit-normalizes the channel vector at each spatial location:
// y[n,:,h,w] = x[n,:,h,w] / sqrt(sum_c x^2 + eps).
template <typename T> Var<T> channel_l2_normalize(const Var<T>& x, T eps);

// Inverted dropout; identity when not training.
template <typename T>
Var<T> dropout(const Var<T>& x, T rate, Rng& rng, bool training);

#define SRTGAN_NN_EXTERN_OPS(T)                                                   \
  extern template Var<T> add(const Var<T>&, const Var<T>&);                       \
  extern template Var<T> sub(const Var<T>&, const Var<T>&);                       \
  extern template Var<T> mul(const Var<T>&, const Var<T>&);                       \
  extern template Var<T> affine(const Var<T>&, T, T);                             \
  extern template Var<T> abs_val(const Var<T>&);                                  \
  extern template Var<T> square(const Var<T>&);                                   \
  extern template Var<T> relu(const Var<T>&);                                     \
  extern template Var<T> leaky_relu(const Var<T>&, T);                            \
  extern template Var<T> sigmoid(const Var<T>&);                                  \
  extern template Var<T> mean_all(const Var<T>&);                                 \
  extern template Var<T> weighted_sum(const std::vector<Var<T>>&,                 \
                                      const std::vector<T>&);                     \
  extern template Var<T> reshape(const Var<T>&, std::vector<int>);                \
  extern template Var<T> conv2d(const Var<T>&, const Var<T>&, const Var<T>&, int, \
                                int);                                             \
  extern template Var<T> linear(const Var<T>&, const Var<T>&, const Var<T>&);     \
  extern template Var<T> batch_norm2d(const Var<T>&, const Var<T>&,               \
                                      const Var<T>&, Tensor<T>*, Tensor<T>*,      \
                                      bool, bool, T, T);                          \
  extern template Var<T> maxpool2x2(const Var<T>&);                               \
  extern template Var<T> nearest_upsample2x(const Var<T>&);                       \
  extern template Var<T> global_avg_pool(const Var<T>&);                          \
  extern template Var<T> scale_channels(const Var<T>&, const Var<T>&);            \
  extern template Var<T> channel_l2_normalize(const Var<T>&, T);                  \
  extern template Var<T> dropout(const Var<T>&, T, Rng&, bool);

SRTGAN_NN_EXTERN_OPS(float)
SRTGAN_NN_EXTERN_OPS(double)
#undef SRTGAN_NN_EXTERN_OPS

}  // namespace nn
}  // namespace srtgan

#endif  // SRTGAN_NN_OPS_H_
