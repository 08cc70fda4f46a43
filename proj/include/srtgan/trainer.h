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

#ifndef SRTGAN_TRAINER_H_
#define SRTGAN_TRAINER_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "srtgan/config.h"
#include "srtgan/dataset.h"
#include "srtgan/metrics.h"
#include "srtgan/nn/adam.h"
#include "srtgan/nn/rng.h"
#include "srtgan/qa_network.h"
#include "srtgan/vgg.h"

namespace srtgan {

// All loss values observed during one optimization step. The discriminator
// fields come from the last D update of the step; the generator fields from
// the single G update that follows. Terms whose weight is zero are skipped
// entirely and recorded as 0.
struct StepRecord {
  std::int64_t step = 0;
  double content = 0.0;
  double qa = 0.0;
  double gan_g = 0.0;
  double perceptual = 0.0;
  double fused_g = 0.0;
  double gan_d = 0.0;
  double fused_d = 0.0;
};

// One key=value line per step, machine-parseable.
std::string step_record_line(const StepRecord& rec);

// FNV-1a over names, shapes, raw values and buffers; the determinism and
// frozen-critic tests compare these across runs.
std::uint64_t params_hash(const nn::ParamMap<float>& m);

struct TrainRunOptions {
  std::string out_dir;                     // checkpoints + train.log
  const PairDataset* validation = nullptr; // used when validate_every > 0
  std::ostream* echo = nullptr;            // mirrors log lines when set
};

struct TrainRunResult {
  std::vector<StepRecord> records;  // steps executed by this call only
  std::string final_checkpoint;
};

// Computes PSNR/SSIM/LPIPS for one restored/reference image pair under the
// given conventions (LPIPS always sees RGB; the border crop still applies).
ImageMetrics measure_pair(const std::string& identifier,
                          const nn::Tensor<float>& sr,
                          const nn::Tensor<float>& hr,
                          const VggExtractor<float>& vgg,
                          const LpipsCalibration& calib,
                          const MetricOptions& opt);

// Runs the generator over every pair and aggregates all three metrics.
// Convention metadata keys are filled in unless the caller already set them.
MetricsReport evaluate(const Generator<float>& gen, const PairDataset& data,
                       const VggExtractor<float>& vgg,
                       const LpipsCalibration& calib, const MetricOptions& opt,
                       std::map<std::string, std::string> metadata = {});

// Owns the full alternating-GAN optimization state: generator and
// discriminator with their Adam optimizers, the frozen quality and
// perceptual critics, and the data-order/augmentation randomness. Every
// random draw derives from config.seed, so a (config, dataset) pair fully
// determines the training trajectory.
class Trainer {
 public:
  explicit Trainer(TrainConfig cfg);

  // One alternating update: d_steps_per_g discriminator updates on the
  // batch (super-resolved anchors recomputed fresh and treated as
  // constants), then one generator update with the discriminator frozen.
  // The negative sample is the bicubic x4 upsample of the LR batch. Any
  // non-finite loss aborts with the offending term and step index.
  StepRecord train_step(const std::vector<ImagePair>& batch);

  // Runs train_step over shuffled, augmented batches until
  // config.total_steps, checkpointing at the configured cadence and
  // appending key=value lines to {out_dir}/train.log. Resumable: a trainer
  // restored from a checkpoint continues the exact same trajectory.
  TrainRunResult train(const PairDataset& data, const TrainRunOptions& opt);

  // Eval-mode x4 restoration of one [1,3,H,W] image, clamped to [0,1].
  nn::Tensor<float> infer(const nn::Tensor<float>& lr) const;

  // Full optimization state in the named-array container; load(save(x)) is
  // bit-identical.
  void save_checkpoint(const std::string& path);
  // When expected is given, a config-hash mismatch is refused. The frozen
  // critics are rebuilt from the stored config and verified by hash.
  static Trainer from_checkpoint(const std::string& path,
                                 const TrainConfig* expected = nullptr);

  MetricsReport evaluate_on(const PairDataset& data, const MetricOptions& opt,
                            const LpipsCalibration* calib = nullptr);

  const TrainConfig& config() const { return cfg_; }
  std::int64_t step() const { return step_; }
  Generator<float>& generator() { return gen_; }
  Discriminator<float>& discriminator() { return disc_; }
  QANetwork<float>& qa() { return qa_; }
  VggExtractor<float>& vgg() { return vgg_; }

 private:
  void restore_from(const struct ArrayFile& af);
  std::vector<ImagePair> next_batch(const PairDataset& data);

  TrainConfig cfg_;
  Generator<float> gen_;
  Discriminator<float> disc_;
  QANetwork<float> qa_;
  VggExtractor<float> vgg_;
  nn::Adam<float> adam_g_;
  nn::Adam<float> adam_d_;
  nn::Rng data_rng_;
  std::int64_t step_ = 0;
  std::int64_t epoch_ = 0;
  std::int64_t cursor_ = 0;  // position inside the current epoch's order
  std::vector<std::int64_t> order_;  // current epoch's shuffled indices
};

}  // namespace srtgan

#endif  // SRTGAN_TRAINER_H_
