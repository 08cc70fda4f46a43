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

#ifndef SRTGAN_VGG_H_
#define SRTGAN_VGG_H_

#include <string>
#include <vector>

#include "srtgan/nn/layers.h"

namespace srtgan {

// VGG-16 style feature ladder; default config matches the conv stack up to
// the fourth stage. One feature tap per stage, taken after the stage's last
// ReLU (the relu1_2 / relu2_2 / relu3_3 / relu4_3 activations).
struct VggConfig {
  std::vector<int> stage_channels = {64, 128, 256, 512};
  std::vector<int> stage_convs = {2, 2, 3, 3};
};

template <typename T>
class VggExtractor {
 public:
  explicit VggExtractor(VggConfig cfg = {});

  // Deterministic stand-in weights for when no pretrained artifact is
  // supplied; frozen after creation either way.
  void init_random(nn::Rng& rng);

  // Weight artifact in the named-array container format; names follow
  // vgg.stage{s}.conv{i}.{weight,bias}.
  void load(const std::string& path);
  void save(const std::string& path) const;

  // The per-stage tap activations, shallowest first.
  std::vector<nn::Var<T>> forward(const nn::Var<T>& img) const;

  int n_taps() const { return int(cfg_.stage_channels.size()); }
  // Smallest input that still reaches the deepest tap.
  int min_input() const { return 1 << (n_taps() - 1); }
  nn::ParamMap<T> params();
  const VggConfig& config() const { return cfg_; }

 private:
  VggConfig cfg_;
  std::vector<std::vector<nn::Conv2d<T>>> stages_;
};

extern template class VggExtractor<float>;
extern template class VggExtractor<double>;

}  // namespace srtgan

#endif  // SRTGAN_VGG_H_
