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

#include "srtgan/nn/layers.h"

#include <cmath>

#include "srtgan/error.h"

namespace srtgan {
namespace nn {

template <typename T>
void ParamMap<T>::add_param(const std::string& name, const Var<T>& v) {
  SRTGAN_CHECK(v, "ParamMap: null parameter '", name, "'");
  SRTGAN_CHECK(!has_param(name), "ParamMap: duplicate parameter '", name, "'");
  params.emplace_back(name, v);
}

template <typename T>
void ParamMap<T>::add_buffer(const std::string& name, Tensor<T>* t) {
  SRTGAN_CHECK(t, "ParamMap: null buffer '", name, "'");
  for (const auto& [n, _] : buffers)
    SRTGAN_CHECK(n != name, "ParamMap: duplicate buffer '", name, "'");
  buffers.emplace_back(name, t);
}

template <typename T>
const Var<T>& ParamMap<T>::param(const std::string& name) const {
  for (const auto& [n, v] : params)
    if (n == name) return v;
  fail("ParamMap: no parameter named '", name, "'");
}

template <typename T>
Tensor<T>* ParamMap<T>::buffer(const std::string& name) const {
  for (const auto& [n, t] : buffers)
    if (n == name) return t;
  fail("ParamMap: no buffer named '", name, "'");
}

template <typename T>
bool ParamMap<T>::has_param(const std::string& name) const {
  for (const auto& [n, _] : params)
    if (n == name) return true;
  return false;
}

template <typename T>
int64_t ParamMap<T>::param_count() const {
  int64_t n = 0;
  for (const auto& [_, v] : params) n += v->value.numel();
  return n;
}

template <typename T>
void ParamMap<T>::zero_grad() const {
  for (const auto& [_, v] : params) v->zero_grad();
}

template <typename T>
void ParamMap<T>::set_requires_grad(bool on) const {
  for (const auto& [_, v] : params) v->requires_grad = on;
}

template <typename T>
void kaiming_normal(Tensor<T>& w, int fan_in, double gain, Rng& rng) {
  SRTGAN_CHECK(fan_in > 0, "kaiming_normal: fan_in must be positive");
  const double std_dev = gain / std::sqrt(double(fan_in));
  for (auto& v : w.data) v = T(std_dev * rng.normal());
}

template <typename T>
Conv2d<T>::Conv2d(int in_ch, int out_ch, int kernel, int stride, int pad)
    : in_ch(in_ch), out_ch(out_ch), kernel(kernel), stride(stride), pad(pad) {
  SRTGAN_CHECK(in_ch > 0 && out_ch > 0 && kernel > 0, "Conv2d: bad dims ", in_ch,
               "/", out_ch, "/", kernel);
  weight = make_var(Tensor<T>({out_ch, in_ch, kernel, kernel}), true);
  bias = make_var(Tensor<T>({out_ch}), true);
}

template <typename T>
void Conv2d<T>::init(Rng& rng, double gain) {
  kaiming_normal(weight->value, in_ch * kernel * kernel, gain, rng);
  bias->value.fill(T(0));
}

template <typename T>
void Conv2d<T>::register_into(ParamMap<T>& m, const std::string& prefix) const {
  m.add_param(prefix + ".weight", weight);
  m.add_param(prefix + ".bias", bias);
}

template <typename T>
BatchNorm2d<T>::BatchNorm2d(int channels) : channels(channels) {
  SRTGAN_CHECK(channels > 0, "BatchNorm2d: bad channel count ", channels);
  gamma = make_var(Tensor<T>({channels}, T(1)), true);
  beta = make_var(Tensor<T>({channels}), true);
  running_mean = Tensor<T>({channels});
  running_var = Tensor<T>({channels}, T(1));
}

template <typename T>
void BatchNorm2d<T>::register_into(ParamMap<T>& m, const std::string& prefix) {
  m.add_param(prefix + ".gamma", gamma);
  m.add_param(prefix + ".beta", beta);
  m.add_buffer(prefix + ".running_mean", &running_mean);
  m.add_buffer(prefix + ".running_var", &running_var);
}

template <typename T>
Linear<T>::Linear(int in_features, int out_features)
    : in_features(in_features), out_features(out_features) {
  SRTGAN_CHECK(in_features > 0 && out_features > 0, "Linear: bad dims ",
               in_features, "/", out_features);
  weight = make_var(Tensor<T>({out_features, in_features}), true);
  bias = make_var(Tensor<T>({out_features}), true);
}

template <typename T>
void Linear<T>::init(Rng& rng, double gain) {
  kaiming_normal(weight->value, in_features, gain, rng);
  bias->value.fill(T(0));
}

template <typename T>
void Linear<T>::register_into(ParamMap<T>& m, const std::string& prefix) const {
  m.add_param(prefix + ".weight", weight);
  m.add_param(prefix + ".bias", bias);
}

#define SRTGAN_NN_INSTANTIATE_LAYERS(T)                            \
  template struct ParamMap<T>;                                     \
  template struct Conv2d<T>;                                       \
  template struct BatchNorm2d<T>;                                  \
  template struct Linear<T>;                                       \
  template void kaiming_normal(Tensor<T>&, int, double, Rng&);

SRTGAN_NN_INSTANTIATE_LAYERS(float)
SRTGAN_NN_INSTANTIATE_LAYERS(double)
#undef SRTGAN_NN_INSTANTIATE_LAYERS

}  // namespace nn
}  // namespace srtgan
