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

#include "srtgan/generator.h"

#include <cmath>

#include "srtgan/error.h"

namespace srtgan {

using nn::Var;

template <typename T>
ChannelAttention<T>::ChannelAttention(int channels, int reduction)
    : reduce(channels, channels / reduction, 1, 1, 0),
      expand(channels / reduction, channels, 1, 1, 0) {
  SRTGAN_CHECK(channels % reduction == 0 && channels / reduction >= 1,
               "ChannelAttention: channels ", channels,
               " not divisible by reduction ", reduction);
}

template <typename T>
Var<T> ChannelAttention<T>::forward(const Var<T>& x) const {
  auto g = nn::global_avg_pool(x);
  g = nn::relu(reduce.forward(g));
  g = nn::sigmoid(expand.forward(g));
  return nn::scale_channels(x, g);
}

template <typename T>
ResBlock<T>::ResBlock(int channels, int n_convs, int kernel, int ca_reduction)
    : ca(channels, ca_reduction) {
  SRTGAN_CHECK(n_convs >= 1, "ResBlock: need at least one conv");
  for (int i = 0; i < n_convs; ++i)
    convs.emplace_back(channels, channels, kernel, 1, kernel / 2);
}

template <typename T>
Var<T> ResBlock<T>::forward(const Var<T>& x) const {
  auto h = x;
  for (size_t i = 0; i < convs.size(); ++i) {
    h = convs[i].forward(h);
    if (i + 1 < convs.size()) h = nn::relu(h);
  }
  return nn::add(x, ca.forward(h));
}

template <typename T>
RirBlock<T>::RirBlock(int channels, int n_resblocks, int n_convs, int kernel,
                      int ca_reduction)
    : skip1x1(channels, channels, 1, 1, 0) {
  SRTGAN_CHECK(n_resblocks >= 1, "RirBlock: need at least one residual block");
  for (int i = 0; i < n_resblocks; ++i)
    blocks.emplace_back(channels, n_convs, kernel, ca_reduction);
}

template <typename T>
Var<T> RirBlock<T>::forward(const Var<T>& x) const {
  auto h = x;
  for (const auto& b : blocks) h = b.forward(h);
  return nn::add(x, skip1x1.forward(h));
}

namespace {
int upsample_stages(int scale) {
  SRTGAN_CHECK(scale >= 2 && (scale & (scale - 1)) == 0,
               "GeneratorConfig: scale must be a power of two >= 2, got ", scale);
  int stages = 0;
  for (int s = scale; s > 1; s /= 2) ++stages;
  return stages;
}
}  // namespace

template <typename T>
Generator<T>::Generator(GeneratorConfig cfg) : cfg_(cfg) {
  SRTGAN_CHECK(cfg.base_channels >= 1 && cfg.n_rir >= 1 &&
                   cfg.resblocks_per_rir >= 1 && cfg.convs_per_resblock >= 1 &&
                   cfg.kernel >= 1 && cfg.kernel % 2 == 1,
               "GeneratorConfig: bad field values");
  const int c = cfg.base_channels;
  llie_conv = nn::Conv2d<T>(3, c, cfg.kernel, 1, cfg.kernel / 2);
  for (int i = 0; i < cfg.n_rir; ++i)
    rirs.emplace_back(c, cfg.resblocks_per_rir, cfg.convs_per_resblock,
                      cfg.kernel, cfg.ca_reduction);
  tail_conv = nn::Conv2d<T>(c, c, cfg.kernel, 1, cfg.kernel / 2);
  const int stages = upsample_stages(cfg.scale);
  for (int s = 0; s < stages; ++s)
    up_convs.emplace_back(c, c, cfg.kernel, 1, cfg.kernel / 2);
  out_conv = nn::Conv2d<T>(c, 3, cfg.kernel, 1, cfg.kernel / 2);
}

template <typename T>
void Generator<T>::init(nn::Rng& rng) {
  const double gain = std::sqrt(2.0);
  llie_conv.init(rng, gain);
  for (auto& rir : rirs) {
    for (auto& res : rir.blocks) {
      for (auto& cv : res.convs) cv.init(rng, gain);
      res.ca.reduce.init(rng, gain);
      res.ca.expand.init(rng, 1.0);
    }
    rir.skip1x1.init(rng, 1.0);
  }
  tail_conv.init(rng, 1.0);
  for (auto& cv : up_convs) cv.init(rng, gain);
  out_conv.init(rng, 1.0);
}

template <typename T>
Var<T> Generator<T>::llie(const Var<T>& lr) const {
  SRTGAN_CHECK(lr->value.ndim() == 4 && lr->value.shape[1] == 3,
               "generator: expected [N,3,H,W] input, got ", lr->value.shape_str());
  return llie_conv.forward(lr);
}

template <typename T>
Var<T> Generator<T>::hlie(const Var<T>& feat) const {
  SRTGAN_CHECK(feat->value.ndim() == 4 &&
                   feat->value.shape[1] == cfg_.base_channels,
               "generator: hlie expects ", cfg_.base_channels, " channels, got ",
               feat->value.shape_str());
  auto h = feat;
  for (const auto& rir : rirs) h = rir.forward(h);
  return nn::add(feat, tail_conv.forward(h));
}

template <typename T>
Var<T> Generator<T>::srrec(const Var<T>& feat) const {
  SRTGAN_CHECK(feat->value.ndim() == 4 &&
                   feat->value.shape[1] == cfg_.base_channels,
               "generator: srrec expects ", cfg_.base_channels, " channels, got ",
               feat->value.shape_str());
  auto h = feat;
  for (const auto& cv : up_convs) {
    h = nn::relu(cv.forward(nn::nearest_upsample2x(h)));
  }
  return out_conv.forward(h);
}

template <typename T>
Var<T> Generator<T>::forward(const Var<T>& lr) const {
  return srrec(hlie(llie(lr)));
}

template <typename T>
nn::ParamMap<T> Generator<T>::params() {
  nn::ParamMap<T> m;
  llie_conv.register_into(m, "llie");
  for (size_t i = 0; i < rirs.size(); ++i) {
    const std::string rp = "hlie.rir" + std::to_string(i);
    for (size_t j = 0; j < rirs[i].blocks.size(); ++j) {
      const std::string bp = rp + ".res" + std::to_string(j);
      auto& res = rirs[i].blocks[j];
      for (size_t k = 0; k < res.convs.size(); ++k)
        res.convs[k].register_into(m, bp + ".conv" + std::to_string(k));
      res.ca.reduce.register_into(m, bp + ".ca_reduce");
      res.ca.expand.register_into(m, bp + ".ca_expand");
    }
    rirs[i].skip1x1.register_into(m, rp + ".skip1x1");
  }
  tail_conv.register_into(m, "hlie.tail_conv");
  for (size_t s = 0; s < up_convs.size(); ++s)
    up_convs[s].register_into(m, "rec.up" + std::to_string(s) + ".conv");
  out_conv.register_into(m, "rec.out_conv");
  return m;
}

template struct ChannelAttention<float>;
template struct ChannelAttention<double>;
template struct ResBlock<float>;
template struct ResBlock<double>;
template struct RirBlock<float>;
template struct RirBlock<double>;
template class Generator<float>;
template class Generator<double>;

}  // namespace srtgan
