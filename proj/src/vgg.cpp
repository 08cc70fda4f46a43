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

#include "srtgan/vgg.h"

#include <cmath>

#include "srtgan/array_file.h"
#include "srtgan/error.h"

namespace srtgan {

using nn::Var;

template <typename T>
VggExtractor<T>::VggExtractor(VggConfig cfg) : cfg_(cfg) {
  SRTGAN_CHECK(!cfg.stage_channels.empty() &&
                   cfg.stage_channels.size() == cfg.stage_convs.size(),
               "VggConfig: stage_channels and stage_convs must align");
  int in_ch = 3;
  for (size_t s = 0; s < cfg.stage_channels.size(); ++s) {
    const int out_ch = cfg.stage_channels[s];
    SRTGAN_CHECK(out_ch >= 1 && cfg.stage_convs[s] >= 1, "VggConfig: bad stage ", s);
    std::vector<nn::Conv2d<T>> stage;
    for (int i = 0; i < cfg.stage_convs[s]; ++i) {
      stage.emplace_back(in_ch, out_ch, 3, 1, 1);
      in_ch = out_ch;
    }
    stages_.push_back(std::move(stage));
  }
  // The extractor is a fixed feature function, never trained here.
  params().set_requires_grad(false);
}

template <typename T>
void VggExtractor<T>::init_random(nn::Rng& rng) {
  for (auto& stage : stages_)
    for (auto& cv : stage) cv.init(rng, std::sqrt(2.0));
}

template <typename T>
void VggExtractor<T>::load(const std::string& path) {
  const ArrayFile af = ArrayFile::load(path);
  auto m = params();
  for (auto& [name, var] : m.params) {
    const auto& src = af.get_f32(name);
    SRTGAN_CHECK(src.shape == var->value.shape, "vgg weights: '", name,
                 "' has shape ", nn::Tensor<float>::shape_str_of(src.shape),
                 ", expected ", var->value.shape_str());
    var->value = src.template cast<T>();
  }
}

template <typename T>
void VggExtractor<T>::save(const std::string& path) const {
  ArrayFile af;
  af.meta["kind"] = "vgg_extractor";
  auto m = const_cast<VggExtractor<T>*>(this)->params();
  for (const auto& [name, var] : m.params)
    af.f32[name] = var->value.template cast<float>();
  af.save(path);
}

template <typename T>
std::vector<Var<T>> VggExtractor<T>::forward(const Var<T>& img) const {
  SRTGAN_CHECK(img->value.ndim() == 4 && img->value.shape[1] == 3,
               "vgg: expected [N,3,H,W] input, got ", img->value.shape_str());
  const int need = min_input();
  SRTGAN_CHECK(img->value.shape[2] >= need && img->value.shape[3] >= need,
               "vgg: input ", img->value.shape[2], "x", img->value.shape[3],
               " smaller than the deepest tap needs (min ", need, ")");
  std::vector<Var<T>> taps;
  auto x = img;
  for (size_t s = 0; s < stages_.size(); ++s) {
    if (s > 0) x = nn::maxpool2x2(x);
    for (const auto& cv : stages_[s]) x = nn::relu(cv.forward(x));
    taps.push_back(x);
  }
  return taps;
}

template <typename T>
nn::ParamMap<T> VggExtractor<T>::params() {
  nn::ParamMap<T> m;
  for (size_t s = 0; s < stages_.size(); ++s)
    for (size_t i = 0; i < stages_[s].size(); ++i)
      stages_[s][i].register_into(m, "vgg.stage" + std::to_string(s) + ".conv" +
                                         std::to_string(i));
  return m;
}

template class VggExtractor<float>;
template class VggExtractor<double>;

}  // namespace srtgan
