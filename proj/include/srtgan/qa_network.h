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

#ifndef SRTGAN_QA_NETWORK_H_
#define SRTGAN_QA_NETWORK_H_

#include <cstdint>
#include <string>
#include <vector>

#include "srtgan/dataset.h"
#include "srtgan/nn/layers.h"

namespace srtgan {

// Two-path full-reference quality scorer. Both paths run the same (shared)
// early blocks, the feature maps are subtracted, and the difference flows
// through the remaining blocks into a pooled regression head that emits a
// mean-opinion score in [score_min, score_max].
struct QAConfig {
  std::vector<int> block_channels = {32, 64, 128, 256};
  // Blocks applied per input path before the subtraction joins them.
  int path_blocks = 2;
  int fc_hidden = 64;
  double dropout_rate = 0.5;
  double score_min = 1.0;
  double score_max = 5.0;
};

template <typename T>
class QANetwork {
 public:
  explicit QANetwork(QAConfig cfg = {});

  void init(nn::Rng& rng);

  // Scores [N,1] for (distorted, reference) batches of identical shape.
  // Because the path weights are shared, forward(x, x) collapses to the
  // head's response to a zero feature map: one constant for any x.
  // dropout_rng is consumed only when training with a nonzero dropout rate.
  nn::Var<T> forward(const nn::Var<T>& primary, const nn::Var<T>& reference,
                     bool training = false, nn::Rng* dropout_rng = nullptr);

  nn::ParamMap<T> params();
  void load(const std::string& path);
  void save(const std::string& path) const;
  const QAConfig& config() const { return cfg_; }

  // Exposed for tests that probe individual stages.
  std::vector<nn::Conv2d<T>> conv_a, conv_b;  // per block: stride 1, stride 2
  nn::Linear<T> fc1, fc2;

 private:
  nn::Var<T> block(int i, const nn::Var<T>& x) const;
  QAConfig cfg_;
};

extern template class QANetwork<float>;
extern template class QANetwork<double>;

// Grouped train/val/test split: every record of one reference image lands in
// exactly one split. Group order is shuffled with rng; sizes use floor(0.7 n)
// and floor(0.1 n) over groups, remainder to test.
struct QASplit {
  std::vector<QARecord> train, val, test;
};
QASplit split_qa_records(const std::vector<QARecord>& records, nn::Rng& rng);

struct QATrainOptions {
  int epochs = 4;
  int batch_size = 8;
  double lr = 1e-4;
  int patch = 64;  // square crop fed to the network
  std::uint64_t seed = 1;
  std::string out_path;  // weight artifact destination; empty skips saving
};

struct QATrainReport {
  std::vector<double> epoch_train_mse;  // running average per epoch
  double train_mse = 0.0;               // final-pass MSE per split
  double val_mse = 0.0;
  double test_mse = 0.0;
  double train_mean_mos = 0.0;
  double baseline_test_mse = 0.0;  // constant predictor at train_mean_mos
};

// Fits the scorer to (distorted, reference, MOS) records with Adam on squared
// error. Pure function of (net initialization, records, options).
template <typename T>
QATrainReport qa_train(QANetwork<T>& net, const std::vector<QARecord>& records,
                       const QATrainOptions& opt);

extern template QATrainReport qa_train(QANetwork<float>&,
                                       const std::vector<QARecord>&,
                                       const QATrainOptions&);
extern template QATrainReport qa_train(QANetwork<double>&,
                                       const std::vector<QARecord>&,
                                       const QATrainOptions&);

}  // namespace srtgan

#endif  // SRTGAN_QA_NETWORK_H_
