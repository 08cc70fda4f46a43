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

#ifndef SRTGAN_DISCRIMINATOR_H_
#define SRTGAN_DISCRIMINATOR_H_

#include <vector>

#include "srtgan/nn/layers.h"

namespace srtgan {

struct DiscriminatorConfig {
  int n_layers = 5;
  int kernel = 4;
  int base_channels = 64;
  std::vector<int> strides = {2, 2, 2, 1, 1};
  int padding = 1;
  double leaky_slope = 0.2;
};

// PatchGAN: a stack of strided convs emitting a spatial map of raw
// (unbounded) realness scores, one per receptive-field patch. Batch
// normalization sits on all layers except the first and last.
template <typename T>
class Discriminator {
 public:
  explicit Discriminator(DiscriminatorConfig cfg = {});

  void init(nn::Rng& rng);

  // training picks batch vs running statistics for the normalization
  // layers; update_running persists batch statistics into the running
  // buffers (only the optimizing step should set it).
  nn::Var<T> forward(const nn::Var<T>& img, bool training,
                     bool update_running = false);

  int receptive_field() const { return receptive_field_; }
  nn::ParamMap<T> params();
  const DiscriminatorConfig& config() const { return cfg_; }

  std::vector<nn::Conv2d<T>> layers;
  std::vector<nn::BatchNorm2d<T>> norms;  // parallel to layers; unused slots empty
  std::vector<bool> has_norm;

 private:
  DiscriminatorConfig cfg_;
  int receptive_field_ = 0;
};

extern template class Discriminator<float>;
extern template class Discriminator<double>;

}  // namespace srtgan

#endif  // SRTGAN_DISCRIMINATOR_H_
