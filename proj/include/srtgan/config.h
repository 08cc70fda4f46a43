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

#ifndef SRTGAN_CONFIG_H_
#define SRTGAN_CONFIG_H_

#include <cstdint>
#include <string>
#include <vector>

#include "srtgan/discriminator.h"
#include "srtgan/generator.h"
#include "srtgan/losses.h"
#include "srtgan/qa_network.h"
#include "srtgan/vgg.h"

namespace srtgan {

// Everything a training run needs beyond the dataset location. Parsed from
// an INI-style file of [section] blocks with key = value lines; '#' and ';'
// start comments. Unknown sections or keys are hard errors so typos cannot
// silently fall back to defaults.
struct TrainConfig {
  // [model]
  GeneratorConfig gen;
  DiscriminatorConfig disc;
  // [critics] architecture of the frozen scorers; must match any weight
  // artifact referenced under [artifacts]
  QAConfig qa;
  VggConfig vgg;
  // [loss]
  LossWeights weights;
  std::string gan_mode = "triplet";  // "triplet" or "vanilla"
  // [optimizer]
  double lr_g = 1e-4;
  double lr_d = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  // [train]
  int batch_size = 4;
  int crop_lr = 48;  // LR crop side; the HR crop is scale x this
  std::int64_t total_steps = 100000;
  int d_steps_per_g = 1;
  std::uint64_t seed = 1;
  // True once a parsed file or override assigned train.seed. Callers that
  // draw a fresh seed for unseeded runs check this; it never serializes.
  bool seed_given = false;
  std::int64_t checkpoint_every = 1000;
  std::int64_t validate_every = 0;  // 0 disables validation
  // [artifacts] optional frozen-critic weight files; empty = seeded stand-in
  std::string qa_weights;
  std::string vgg_weights;
};

// Overrides are "section.key=value" strings applied after the file, so
// command-line settings win.
TrainConfig parse_train_config(const std::string& text,
                               const std::vector<std::string>& overrides = {});
TrainConfig load_train_config(const std::string& path,
                              const std::vector<std::string>& overrides = {});

// Deterministic full serialization; equal configs produce equal text.
std::string canonical_config_text(const TrainConfig& cfg);
// FNV-1a of the canonical text; checkpoints refuse to resume across hashes.
std::uint64_t config_hash(const TrainConfig& cfg);

}  // namespace srtgan

#endif  // SRTGAN_CONFIG_H_
