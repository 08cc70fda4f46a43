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

#include "srtgan/discriminator.h"

#include <cmath>

#include "srtgan/error.h"

namespace srtgan {

using nn::Var;

template <typename T>
Discriminator<T>::Discriminator(DiscriminatorConfig cfg) : cfg_(cfg) {
  SRTGAN_CHECK(cfg.n_layers >= 2, "DiscriminatorConfig: need at least 2 layers");
  SRTGAN_CHECK(int(cfg.strides.size()) == cfg.n_layers,
               "DiscriminatorConfig: strides has ", cfg.strides.size(),
               " entries for ", cfg.n_layers, " layers");
  SRTGAN_CHECK(cfg.kernel >= 1 && cfg.padding >= 0 && cfg.base_channels >= 1,
               "DiscriminatorConfig: bad field values");

  int in_ch = 3;
  int rf = 1, jump = 1;
  for (int i = 0; i < cfg.n_layers; ++i) {
    const bool last = i + 1 == cfg.n_layers;
    // Channel count doubles per layer until the single-channel score map.
    const int out_ch = last ? 1 : cfg.base_channels << i;
    const int stride = cfg.strides[i];
    SRTGAN_CHECK(stride >= 1, "DiscriminatorConfig: bad stride ", stride);
    layers.emplace_back(in_ch, out_ch, cfg.kernel, stride, cfg.padding);
    const bool norm = i != 0 && !last;
    has_norm.push_back(norm);
    norms.emplace_back(norm ? nn::BatchNorm2d<T>(out_ch) : nn::BatchNorm2d<T>());
    rf += (cfg.kernel - 1) * jump;
    jump *= stride;
    in_ch = out_ch;
  }
  receptive_field_ = rf;
}

template <typename T>
void Discriminator<T>::init(nn::Rng& rng) {
  const double gain = std::sqrt(2.0);
  for (size_t i = 0; i < layers.size(); ++i)
    layers[i].init(rng, i + 1 == layers.size() ? 1.0 : gain);
}

template <typename T>
Var<T> Discriminator<T>::forward(const Var<T>& img, bool training,
                                 bool update_running) {
  SRTGAN_CHECK(img->value.ndim() == 4 && img->value.shape[1] == 3,
               "discriminator: expected [N,3,H,W] input, got ",
               img->value.shape_str());
  const int h = img->value.shape[2], w = img->value.shape[3];
  SRTGAN_CHECK(h >= receptive_field_ && w >= receptive_field_,
               "discriminator: input ", h, "x", w, " smaller than the ",
               receptive_field_, "x", receptive_field_,
               " receptive field; need at least ", receptive_field_,
               " pixels per side");
  auto x = img;
  for (size_t i = 0; i < layers.size(); ++i) {
    x = layers[i].forward(x);
    if (has_norm[i]) x = norms[i].forward(x, training, update_running);
    if (i + 1 < layers.size()) x = nn::leaky_relu(x, T(cfg_.leaky_slope));
  }
  return x;
}

template <typename T>
nn::ParamMap<T> Discriminator<T>::params() {
  nn::ParamMap<T> m;
  for (size_t i = 0; i < layers.size(); ++i) {
    const std::string prefix = "disc.layer" + std::to_string(i);
    layers[i].register_into(m, prefix);
    if (has_norm[i]) norms[i].register_into(m, prefix + ".norm");
  }
  return m;
}

template class Discriminator<float>;
template class Discriminator<double>;

}  // namespace srtgan
