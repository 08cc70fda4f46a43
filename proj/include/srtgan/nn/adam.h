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

#ifndef SRTGAN_NN_ADAM_H_
#define SRTGAN_NN_ADAM_H_

#include <string>
#include <vector>

#include "srtgan/nn/layers.h"

namespace srtgan {
namespace nn {

template <typename T>
class Adam {
 public:
  struct Config {
    double lr = 1e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
  };

  Adam(const ParamMap<T>& params, Config cfg);

  // One update from accumulated grads; parameters without a grad are skipped
  // (their moments do not advance either).
  void step();
  void zero_grad();

  double lr() const { return cfg_.lr; }
  void set_lr(double lr) { cfg_.lr = lr; }
  int64_t step_count() const { return t_; }
  void set_step_count(int64_t t) { t_ = t; }

  size_t size() const { return params_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  Tensor<T>& moment1(size_t i) { return m_[i]; }
  Tensor<T>& moment2(size_t i) { return v_[i]; }

 private:
  Config cfg_;
  std::vector<std::string> names_;
  std::vector<Var<T>> params_;
  std::vector<Tensor<T>> m_, v_;
  int64_t t_ = 0;
};

extern template class Adam<float>;
extern template class Adam<double>;

}  // namespace nn
}  // namespace srtgan

#endif  // SRTGAN_NN_ADAM_H_
