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

#ifndef SRTGAN_METRICS_H_
#define SRTGAN_METRICS_H_

#include <map>
#include <string>
#include <vector>

#include "srtgan/nn/tensor.h"
#include "srtgan/vgg.h"

namespace srtgan {

// 10 * log10(max_val^2 / MSE) over all elements; identical inputs report the
// +infinity sentinel.
template <typename T>
double psnr(const nn::Tensor<T>& a, const nn::Tensor<T>& b,
            double max_val = 1.0);

// Mean local SSIM with an 11x11 Gaussian window (sigma 1.5, K1 0.01,
// K2 0.03, data range 1), valid windows only, computed per channel and
// averaged. Inputs are [N,C,H,W] with H,W >= 11.
template <typename T>
double ssim(const nn::Tensor<T>& a, const nn::Tensor<T>& b);

extern template double psnr(const nn::Tensor<float>&, const nn::Tensor<float>&,
                            double);
extern template double psnr(const nn::Tensor<double>&,
                            const nn::Tensor<double>&, double);
extern template double ssim(const nn::Tensor<float>&, const nn::Tensor<float>&);
extern template double ssim(const nn::Tensor<double>&,
                            const nn::Tensor<double>&);

// Channel/border conventions applied before fidelity metrics. The paper
// never fixes a convention, so reports carry which one was used.
struct MetricOptions {
  bool y_channel = false;  // BT.601 luma (the usual SR comparison channel)
  int border = 0;          // pixels cropped from every side first
};

// Applies the conventions above to one [1,3,H,W] image.
nn::Tensor<float> apply_metric_conventions(const nn::Tensor<float>& img,
                                           const MetricOptions& opt);

// Per-tap channel weights of the perceptual distance's linear head.
struct LpipsCalibration {
  std::vector<nn::Tensor<float>> tap_weights;  // one [C_tap] vector per tap

  // Named-array file holding lpips.lin{i}.weight vectors. A missing or
  // malformed file raises with instructions on how to supply one.
  static LpipsCalibration load(const std::string& path);
  void save(const std::string& path) const;
  // Every weight 1/sqrt(C): a documented stand-in when no calibrated
  // artifact is available.
  static LpipsCalibration uniform_for(const std::vector<int>& tap_channels);
};

// Perceptual distance: per tap, unit-normalize channel vectors, take the
// calibration-weighted squared difference summed over channels, average
// spatially, and add up the taps. Zero iff the features agree everywhere.
template <typename T>
double lpips(const VggExtractor<T>& extractor, const LpipsCalibration& calib,
             const nn::Tensor<float>& a, const nn::Tensor<float>& b);

extern template double lpips(const VggExtractor<float>&,
                             const LpipsCalibration&, const nn::Tensor<float>&,
                             const nn::Tensor<float>&);
extern template double lpips(const VggExtractor<double>&,
                             const LpipsCalibration&, const nn::Tensor<float>&,
                             const nn::Tensor<float>&);

struct ImageMetrics {
  std::string identifier;
  double psnr = 0.0;
  double ssim = 0.0;
  double lpips = 0.0;
};

struct MetricsReport {
  std::vector<ImageMetrics> records;
  double mean_psnr = 0.0;
  double mean_ssim = 0.0;
  double mean_lpips = 0.0;
  std::map<std::string, std::string> metadata;
};

// Fills the aggregate means (record order does not matter).
MetricsReport make_report(std::vector<ImageMetrics> records,
                          std::map<std::string, std::string> metadata);

// Machine-readable JSON; infinite values serialize as the string "inf".
std::string report_to_json(const MetricsReport& report);
// Human-readable per-image table with a mean row, columns
// "PSNR (up) / SSIM (up) / LPIPS (down)".
std::string report_to_table(const MetricsReport& report);

}  // namespace srtgan

#endif  // SRTGAN_METRICS_H_
