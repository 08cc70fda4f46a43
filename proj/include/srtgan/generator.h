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

#ifndef SRTGAN_GENERATOR_H_
#define SRTGAN_GENERATOR_H_

#include <vector>

#include "srtgan/nn/adam.h"
#include "srtgan/nn/layers.h"

namespace srtgan {

struct GeneratorConfig {
  int base_channels = 32;
  int n_rir = 32;
  int resblocks_per_rir = 3;
  int convs_per_resblock = 4;
  int ca_reduction = 8;
  int scale = 4;
  int kernel = 3;
};

// Per-channel gating from each channel's global average through a
// reduce/expand bottleneck with a sigmoid.
template <typename T>
struct ChannelAttention {
  nn::Conv2d<T> reduce, expand;

  ChannelAttention() = default;
  ChannelAttention(int channels, int reduction);
  nn::Var<T> forward(const nn::Var<T>& x) const;
};

// x + CA(conv chain with ReLU between convs, none after the last).
template <typename T>
struct ResBlock {
  std::vector<nn::Conv2d<T>> convs;
  ChannelAttention<T> ca;

  ResBlock() = default;
  ResBlock(int channels, int n_convs, int kernel, int ca_reduction);
  nn::Var<T> forward(const nn::Var<T>& x) const;
};

// x + Conv1x1(ResBlock chain(x)).
template <typename T>
struct RirBlock {
  std::vector<ResBlock<T>> blocks;
  nn::Conv2d<T> skip1x1;

  RirBlock() = default;
  RirBlock(int channels, int n_resblocks, int n_convs, int kernel, int ca_reduction);
  nn::Var<T> forward(const nn::Var<T>& x) const;
};

// The x4 super-resolution network: a low-level feature conv, a stack of
// residual-in-residual blocks under one long skip, and nearest-neighbor
// upsampling reconstruction.
template <typename T>
class Generator {
 public:
  explicit Generator(GeneratorConfig cfg = {});

  void init(nn::Rng& rng);

  nn::Var<T> llie(const nn::Var<T>& lr) const;     // [N,3,H,W] -> [N,C,H,W]
  nn::Var<T> hlie(const nn::Var<T>& feat) const;   // shape preserved
  nn::Var<T> srrec(const nn::Var<T>& feat) const;  // [N,C,H,W] -> [N,3,sH,sW]
  nn::Var<T> forward(const nn::Var<T>& lr) const;

  nn::ParamMap<T> params();
  const GeneratorConfig& config() const { return cfg_; }

  // Exposed for white-box tests.
  nn::Conv2d<T> llie_conv;
  std::vector<RirBlock<T>> rirs;
  nn::Conv2d<T> tail_conv;
  std::vector<nn::Conv2d<T>> up_convs;
  nn::Conv2d<T> out_conv;

 private:
  GeneratorConfig cfg_;
};

extern template struct ChannelAttention<float>;
extern template struct ChannelAttention<double>;
extern template struct ResBlock<float>;
extern template struct ResBlock<double>;
extern template struct RirBlock<float>;
extern template struct RirBlock<double>;
extern template class Generator<float>;
extern template class Generator<double>;

}  // namespace srtgan

#endif  // SRTGAN_GENERATOR_H_
