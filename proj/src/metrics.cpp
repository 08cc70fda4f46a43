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

#include "srtgan/metrics.h"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "srtgan/array_file.h"
#include "srtgan/augment.h"
#include "srtgan/error.h"
#include "srtgan/image.h"
#include "srtgan/nn/autograd.h"

namespace srtgan {

using nn::Tensor;

template <typename T>
double psnr(const Tensor<T>& a, const Tensor<T>& b, double max_val) {
  SRTGAN_CHECK(a.same_shape(b), "psnr: shapes differ, ", a.shape_str(), " vs ",
               b.shape_str());
  SRTGAN_CHECK(a.numel() > 0, "psnr: empty input");
  SRTGAN_CHECK(max_val > 0, "psnr: max_val must be positive");
  double se = 0.0;
  for (int64_t i = 0; i < a.numel(); ++i) {
    const double d = double(a.data[i]) - double(b.data[i]);
    se += d * d;
  }
  const double mse = se / double(a.numel());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(max_val * max_val / mse);
}

namespace {

constexpr int kSsimWindow = 11;
constexpr int kSsimRadius = kSsimWindow / 2;

// Normalized Gaussian taps, sigma 1.5, truncated at the window edge.
const std::vector<double>& ssim_kernel() {
  static const std::vector<double> k = [] {
    std::vector<double> v(kSsimWindow);
    double sum = 0.0;
    for (int i = 0; i < kSsimWindow; ++i) {
      const double d = double(i - kSsimRadius);
      v[i] = std::exp(-0.5 * d * d / (1.5 * 1.5));
      sum += v[i];
    }
    for (auto& x : v) x /= sum;
    return v;
  }();
  return k;
}

// Separable valid-window blur: [h,w] -> [h-10, w-10].
std::vector<double> blur_valid(const std::vector<double>& p, int h, int w) {
  const auto& k = ssim_kernel();
  const int wv = w - 2 * kSsimRadius;
  const int hv = h - 2 * kSsimRadius;
  std::vector<double> tmp(size_t(h) * wv);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < wv; ++x) {
      double acc = 0.0;
      for (int t = 0; t < kSsimWindow; ++t) acc += k[t] * p[y * w + x + t];
      tmp[y * wv + x] = acc;
    }
  std::vector<double> out(size_t(hv) * wv);
  for (int y = 0; y < hv; ++y)
    for (int x = 0; x < wv; ++x) {
      double acc = 0.0;
      for (int t = 0; t < kSsimWindow; ++t) acc += k[t] * tmp[(y + t) * wv + x];
      out[y * wv + x] = acc;
    }
  return out;
}

double ssim_plane(const std::vector<double>& x, const std::vector<double>& y,
                  int h, int w) {
  const int64_t n = int64_t(h) * w;
  std::vector<double> xx(n), yy(n), xy(n);
  for (int64_t i = 0; i < n; ++i) {
    xx[i] = x[i] * x[i];
    yy[i] = y[i] * y[i];
    xy[i] = x[i] * y[i];
  }
  const auto ux = blur_valid(x, h, w);
  const auto uy = blur_valid(y, h, w);
  const auto uxx = blur_valid(xx, h, w);
  const auto uyy = blur_valid(yy, h, w);
  const auto uxy = blur_valid(xy, h, w);

  constexpr double kC1 = 0.01 * 0.01;  // (K1 * data_range)^2
  constexpr double kC2 = 0.03 * 0.03;
  double total = 0.0;
  for (size_t i = 0; i < ux.size(); ++i) {
    const double vx = uxx[i] - ux[i] * ux[i];
    const double vy = uyy[i] - uy[i] * uy[i];
    const double vxy = uxy[i] - ux[i] * uy[i];
    const double a1 = 2.0 * ux[i] * uy[i] + kC1;
    const double a2 = 2.0 * vxy + kC2;
    const double b1 = ux[i] * ux[i] + uy[i] * uy[i] + kC1;
    const double b2 = vx + vy + kC2;
    total += (a1 * a2) / (b1 * b2);
  }
  return total / double(ux.size());
}

}  // namespace

template <typename T>
double ssim(const Tensor<T>& a, const Tensor<T>& b) {
  SRTGAN_CHECK(a.same_shape(b), "ssim: shapes differ, ", a.shape_str(), " vs ",
               b.shape_str());
  SRTGAN_CHECK(a.ndim() == 4, "ssim: expected [N,C,H,W], got ", a.shape_str());
  const int n = a.shape[0], c = a.shape[1], h = a.shape[2], w = a.shape[3];
  SRTGAN_CHECK(h >= kSsimWindow && w >= kSsimWindow, "ssim: image ", h, "x", w,
               " smaller than the ", kSsimWindow, "x", kSsimWindow, " window");
  double total = 0.0;
  std::vector<double> px(size_t(h) * w), py(size_t(h) * w);
  for (int ni = 0; ni < n; ++ni)
    for (int ci = 0; ci < c; ++ci) {
      const int64_t base = (int64_t(ni) * c + ci) * h * w;
      for (int64_t i = 0; i < int64_t(h) * w; ++i) {
        px[i] = double(a.data[base + i]);
        py[i] = double(b.data[base + i]);
      }
      total += ssim_plane(px, py, h, w);
    }
  return total / double(n * c);
}

template double psnr(const Tensor<float>&, const Tensor<float>&, double);
template double psnr(const Tensor<double>&, const Tensor<double>&, double);
template double ssim(const Tensor<float>&, const Tensor<float>&);
template double ssim(const Tensor<double>&, const Tensor<double>&);

Tensor<float> apply_metric_conventions(const Tensor<float>& img,
                                       const MetricOptions& opt) {
  check_image(img, "metric input");
  Tensor<float> out = img;
  if (opt.border > 0) {
    const int h = out.shape[2], w = out.shape[3];
    SRTGAN_CHECK(h > 2 * opt.border && w > 2 * opt.border,
                 "metric border crop of ", opt.border, " leaves no pixels of ",
                 h, "x", w);
    out = crop(out, opt.border, opt.border, h - 2 * opt.border,
               w - 2 * opt.border);
  }
  if (opt.y_channel) {
    const int h = out.shape[2], w = out.shape[3];
    Tensor<float> y({1, 1, h, w});
    for (int64_t i = 0; i < int64_t(h) * w; ++i) {
      const double r = out.data[i];
      const double g = out.data[int64_t(h) * w + i];
      const double b = out.data[2 * int64_t(h) * w + i];
      // BT.601 luma on the [16,235]/255 scale used in SR comparisons.
      y.data[i] = float((65.481 * r + 128.553 * g + 24.966 * b + 16.0) / 255.0);
    }
    out = std::move(y);
  }
  return out;
}

LpipsCalibration LpipsCalibration::load(const std::string& path) {
  ArrayFile af;
  try {
    af = ArrayFile::load(path);
  } catch (const Error& e) {
    fail("LPIPS calibration '", path,
         "' could not be read (", e.what(),
         "). Supply a named-array file holding one float32 vector "
         "'lpips.lin{i}.weight' per extractor tap, sized to that tap's "
         "channel count, or omit the calibration flag to fall back to "
         "documented uniform stand-in weights.");
  }
  LpipsCalibration calib;
  for (int i = 0;; ++i) {
    const std::string name = "lpips.lin" + std::to_string(i) + ".weight";
    auto it = af.f32.find(name);
    if (it == af.f32.end()) break;
    SRTGAN_CHECK(it->second.ndim() == 1, "LPIPS calibration '", path, "': ",
                 name, " must be a vector, got ", it->second.shape_str());
    calib.tap_weights.push_back(it->second);
  }
  SRTGAN_CHECK(!calib.tap_weights.empty(), "LPIPS calibration '", path,
               "' holds no lpips.lin{i}.weight arrays");
  return calib;
}

void LpipsCalibration::save(const std::string& path) const {
  ArrayFile af;
  af.meta["kind"] = "lpips_calibration";
  for (size_t i = 0; i < tap_weights.size(); ++i)
    af.f32["lpips.lin" + std::to_string(i) + ".weight"] = tap_weights[i];
  af.save(path);
}

LpipsCalibration LpipsCalibration::uniform_for(
    const std::vector<int>& tap_channels) {
  LpipsCalibration calib;
  for (int c : tap_channels) {
    SRTGAN_CHECK(c >= 1, "LPIPS calibration: bad tap width ", c);
    Tensor<float> w({c});
    w.fill(float(1.0 / std::sqrt(double(c))));
    calib.tap_weights.push_back(std::move(w));
  }
  return calib;
}

template <typename T>
double lpips(const VggExtractor<T>& extractor, const LpipsCalibration& calib,
             const Tensor<float>& a, const Tensor<float>& b) {
  SRTGAN_CHECK(a.same_shape(b), "lpips: shapes differ, ", a.shape_str(), " vs ",
               b.shape_str());
  SRTGAN_CHECK(a.ndim() == 4 && a.shape[0] == 1 && a.shape[1] == 3,
               "lpips: expected [1,3,H,W], got ", a.shape_str());
  SRTGAN_CHECK(int(calib.tap_weights.size()) == extractor.n_taps(),
               "lpips: calibration has ", calib.tap_weights.size(),
               " tap vectors for an extractor with ", extractor.n_taps());

  nn::NoGradGuard guard;
  const auto fa = extractor.forward(nn::make_var(a.template cast<T>(), false));
  const auto fb = extractor.forward(nn::make_var(b.template cast<T>(), false));

  double total = 0.0;
  for (size_t t = 0; t < fa.size(); ++t) {
    const Tensor<T>& xa = fa[t]->value;
    const Tensor<T>& xb = fb[t]->value;
    const Tensor<float>& w = calib.tap_weights[t];
    const int c = xa.shape[1], h = xa.shape[2], wd = xa.shape[3];
    SRTGAN_CHECK(w.numel() == c, "lpips: tap ", t, " weight vector has ",
                 w.numel(), " entries for ", c, " channels");
    double tap_sum = 0.0;
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < wd; ++x) {
        double na = 1e-10, nb = 1e-10;
        for (int ci = 0; ci < c; ++ci) {
          const double va = double(xa.at4(0, ci, y, x));
          const double vb = double(xb.at4(0, ci, y, x));
          na += va * va;
          nb += vb * vb;
        }
        na = std::sqrt(na);
        nb = std::sqrt(nb);
        for (int ci = 0; ci < c; ++ci) {
          const double d = double(xa.at4(0, ci, y, x)) / na -
                           double(xb.at4(0, ci, y, x)) / nb;
          const double wd_ = double(w.data[ci]) * d;
          tap_sum += wd_ * wd_;
        }
      }
    total += tap_sum / double(int64_t(h) * wd);
  }
  return total;
}

template double lpips(const VggExtractor<float>&, const LpipsCalibration&,
                      const Tensor<float>&, const Tensor<float>&);
template double lpips(const VggExtractor<double>&, const LpipsCalibration&,
                      const Tensor<float>&, const Tensor<float>&);

namespace {

nlohmann::json metric_value(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

std::string format_metric(double v, int width, int precision) {
  std::ostringstream os;
  if (std::isinf(v)) {
    os << std::setw(width) << (v > 0 ? "inf" : "-inf");
  } else {
    os << std::setw(width) << std::fixed << std::setprecision(precision) << v;
  }
  return os.str();
}

}  // namespace

MetricsReport make_report(std::vector<ImageMetrics> records,
                          std::map<std::string, std::string> metadata) {
  SRTGAN_CHECK(!records.empty(), "metrics report: no records");
  MetricsReport r;
  r.records = std::move(records);
  r.metadata = std::move(metadata);
  for (const auto& rec : r.records) {
    r.mean_psnr += rec.psnr;
    r.mean_ssim += rec.ssim;
    r.mean_lpips += rec.lpips;
  }
  const double n = double(r.records.size());
  r.mean_psnr /= n;
  r.mean_ssim /= n;
  r.mean_lpips /= n;
  return r;
}

std::string report_to_json(const MetricsReport& report) {
  nlohmann::json j;
  j["records"] = nlohmann::json::array();
  for (const auto& rec : report.records) {
    j["records"].push_back({{"identifier", rec.identifier},
                            {"psnr", metric_value(rec.psnr)},
                            {"ssim", metric_value(rec.ssim)},
                            {"lpips", metric_value(rec.lpips)}});
  }
  j["aggregates"] = {{"mean_psnr", metric_value(report.mean_psnr)},
                     {"mean_ssim", metric_value(report.mean_ssim)},
                     {"mean_lpips", metric_value(report.mean_lpips)},
                     {"count", report.records.size()}};
  j["metadata"] = report.metadata;
  return j.dump(2) + "\n";
}

std::string report_to_table(const MetricsReport& report) {
  std::ostringstream os;
  size_t name_w = 4;
  for (const auto& rec : report.records)
    name_w = std::max(name_w, rec.identifier.size());
  os << std::left << std::setw(int(name_w)) << "" << std::right
     << "  PSNR \xE2\x86\x91  SSIM \xE2\x86\x91  LPIPS \xE2\x86\x93\n";
  for (const auto& rec : report.records) {
    os << std::left << std::setw(int(name_w)) << rec.identifier << std::right
       << format_metric(rec.psnr, 8, 2) << format_metric(rec.ssim, 8, 4)
       << format_metric(rec.lpips, 9, 4) << "\n";
  }
  os << std::left << std::setw(int(name_w)) << "mean" << std::right
     << format_metric(report.mean_psnr, 8, 2)
     << format_metric(report.mean_ssim, 8, 4)
     << format_metric(report.mean_lpips, 9, 4) << "\n";
  return os.str();
}

}  // namespace srtgan
