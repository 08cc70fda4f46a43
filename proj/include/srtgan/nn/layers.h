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

#ifndef SRTGAN_NN_LAYERS_H_
#define SRTGAN_NN_LAYERS_H_

#include <string>
#include <utility>
#include <vector>

#include "srtgan/nn/ops.h"

namespace srtgan {
namespace nn {

// Ordered, name-addressed view over a network's parameters and persistent
// buffers (running statistics). Networks rebuild it on demand; buffer
// pointers stay valid for the owning network's lifetime.
template <typename T>
struct ParamMap {
  std::vector<std::pair<std::string, Var<T>>> params;
  std::vector<std::pair<std::string, Tensor<T>*>> buffers;

  void add_param(const std::string& name, const Var<T>& v);
  void add_buffer(const std::string& name, Tensor<T>* t);
  const Var<T>& param(const std::string& name) const;
  Tensor<T>* buffer(const std::string& name) const;
  bool has_param(const std::string& name) const;
  int64_t param_count() const;
  void zero_grad() const;
  void set_requires_grad(bool on) const;
};

// He-style normal init: stddev = gain / sqrt(fan_in).
template <typename T>
void kaiming_normal(Tensor<T>& w, int fan_in, double gain, Rng& rng);

template <typename T>
struct Conv2d {
  int in_ch = 0, out_ch = 0, kernel = 0, stride = 1, pad = 0;
  Var<T> weight, bias;

  Conv2d() = default;
  Conv2d(int in_ch, int out_ch, int kernel, int stride, int pad);
  void init(Rng& rng, double gain);
  Var<T> forward(const Var<T>& x) const {
    return conv2d(x, weight, bias, stride, pad);
  }
  void register_into(ParamMap<T>& m, const std::string& prefix) const;
  int64_t param_count() const { return weight->value.numel() + bias->value.numel(); }
};

template <typename T>
struct BatchNorm2d {
  int channels = 0;
  T momentum = T(0.1);
  T eps = T(1e-5);
  Var<T> gamma, beta;
  Tensor<T> running_mean, running_var;

  BatchNorm2d() = default;
  explicit BatchNorm2d(int channels);
  Var<T> forward(const Var<T>& x, bool training, bool update_running) {
    return batch_norm2d(x, gamma, beta, &running_mean, &running_var, training,
                        update_running, momentum, eps);
  }
  void register_into(ParamMap<T>& m, const std::string& prefix);
  int64_t param_count() const { return 2 * int64_t(channels); }
};

template <typename T>
struct Linear {
  int in_features = 0, out_features = 0;
  Var<T> weight, bias;

  Linear() = default;
  Linear(int in_features, int out_features);
  void init(Rng& rng, double gain);
  Var<T> forward(const Var<T>& x) const { return linear(x, weight, bias); }
  void register_into(ParamMap<T>& m, const std::string& prefix) const;
  int64_t param_count() const { return weight->value.numel() + bias->value.numel(); }
};

#define SRTGAN_NN_EXTERN_LAYERS(T)   \
  extern template struct ParamMap<T>; \
  extern template struct Conv2d<T>;   \
  extern template struct BatchNorm2d<T>; \
  extern template struct Linear<T>;   \
  extern template void kaiming_normal(Tensor<T>&, int, double, Rng&);

SRTGAN_NN_EXTERN_LAYERS(float)
SRTGAN_NN_EXTERN_LAYERS(double)
#undef SRTGAN_NN_EXTERN_LAYERS

}  // namespace nn
}  // namespace srtgan

#endif  // SRTGAN_NN_LAYERS_H_
