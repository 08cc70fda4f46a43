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

#include "srtgan/nn/adam.h"

#include <cmath>

#include "srtgan/error.h"

namespace srtgan {
namespace nn {

template <typename T>
Adam<T>::Adam(const ParamMap<T>& params, Config cfg) : cfg_(cfg) {
  SRTGAN_CHECK(cfg.lr > 0 && cfg.beta1 >= 0 && cfg.beta1 < 1 && cfg.beta2 >= 0 &&
                   cfg.beta2 < 1 && cfg.eps > 0,
               "Adam: bad hyperparameters lr=", cfg.lr, " beta1=", cfg.beta1,
               " beta2=", cfg.beta2, " eps=", cfg.eps);
  names_.reserve(params.params.size());
  params_.reserve(params.params.size());
  for (const auto& [name, var] : params.params) {
    names_.push_back(name);
    params_.push_back(var);
    m_.emplace_back(var->value.shape);
    v_.emplace_back(var->value.shape);
  }
}

template <typename T>
void Adam<T>::step() {
  ++t_;
  const double bc1 = 1.0 - std::pow(cfg_.beta1, double(t_));
  const double bc2 = 1.0 - std::pow(cfg_.beta2, double(t_));
  const T b1 = T(cfg_.beta1), b2 = T(cfg_.beta2);
  const T one_b1 = T(1.0 - cfg_.beta1), one_b2 = T(1.0 - cfg_.beta2);
  const T lr_hat = T(cfg_.lr / bc1);
  const T denom_scale = T(1.0 / std::sqrt(bc2));
  const T eps = T(cfg_.eps);
  for (size_t i = 0; i < params_.size(); ++i) {
    Node<T>* p = params_[i].get();
    if (p->grad.data.empty()) continue;
    Tensor<T>& m = m_[i];
    Tensor<T>& v = v_[i];
    for (int64_t j = 0; j < p->value.numel(); ++j) {
      const T g = p->grad.data[j];
      m.data[j] = b1 * m.data[j] + one_b1 * g;
      v.data[j] = b2 * v.data[j] + one_b2 * g * g;
      p->value.data[j] -=
          lr_hat * m.data[j] / (std::sqrt(v.data[j]) * denom_scale + eps);
    }
  }
}

template <typename T>
void Adam<T>::zero_grad() {
  for (auto& p : params_) p->zero_grad();
}

template class Adam<float>;
template class Adam<double>;

}  // namespace nn
}  // namespace srtgan
