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

#include "srtgan/image.h"

#include <cmath>
#include <filesystem>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "srtgan/error.h"

namespace srtgan {

nn::Tensor<float> load_image(const std::string& path) {
  SRTGAN_CHECK(std::filesystem::exists(path), "load_image: no such file: ", path);
  cv::Mat m = cv::imread(path, cv::IMREAD_UNCHANGED);
  SRTGAN_CHECK(!m.empty(), "load_image: cannot decode image: ", path);
  SRTGAN_CHECK(m.channels() == 3, "load_image: expected 3-channel RGB, got ",
               m.channels(), " channel(s): ", path);
  float scale;
  if (m.depth() == CV_8U) {
    scale = 1.0f / 255.0f;
  } else if (m.depth() == CV_16U) {
    scale = 1.0f / 65535.0f;
  } else {
    fail("load_image: unsupported bit depth (want 8- or 16-bit): ", path);
  }

  nn::Tensor<float> out({1, 3, m.rows, m.cols});
  // OpenCV decodes to BGR.
  for (int y = 0; y < m.rows; ++y) {
    for (int x = 0; x < m.cols; ++x) {
      float b, g, r;
      if (m.depth() == CV_8U) {
        const auto& px = m.at<cv::Vec3b>(y, x);
        b = px[0] * scale;
        g = px[1] * scale;
        r = px[2] * scale;
      } else {
        const auto& px = m.at<cv::Vec3w>(y, x);
        b = px[0] * scale;
        g = px[1] * scale;
        r = px[2] * scale;
      }
      out.at4(0, 0, y, x) = r;
      out.at4(0, 1, y, x) = g;
      out.at4(0, 2, y, x) = b;
    }
  }
  return out;
}

void save_image_png(const std::string& path, const nn::Tensor<float>& img) {
  check_image(img, "save_image_png");
  const int h = img.shape[2], w = img.shape[3];
  cv::Mat m(h, w, CV_8UC3);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      auto q = [&](int c) {
        float v = img.at4(0, c, y, x);
        v = std::min(1.0f, std::max(0.0f, v));
        return static_cast<unsigned char>(std::lround(v * 255.0f));
      };
      m.at<cv::Vec3b>(y, x) = cv::Vec3b(q(2), q(1), q(0));  // BGR on disk
    }
  }
  SRTGAN_CHECK(cv::imwrite(path, m), "save_image_png: cannot write: ", path);
}

void check_image(const nn::Tensor<float>& img, const char* what) {
  SRTGAN_CHECK(img.ndim() == 4 && img.shape[0] == 1 && img.shape[1] == 3,
               what, ": expected [1,3,H,W] image, got ", img.shape_str());
  SRTGAN_CHECK(img.shape[2] >= 1 && img.shape[3] >= 1, what,
               ": empty spatial dims ", img.shape_str());
  SRTGAN_CHECK(img.all_finite(), what, ": non-finite pixel values");
}

void check_pair(const ImagePair& pair) {
  check_image(pair.lr, "check_pair(lr)");
  check_image(pair.hr, "check_pair(hr)");
  SRTGAN_CHECK(pair.scale >= 1, "check_pair: bad scale ", pair.scale);
  SRTGAN_CHECK(pair.hr.shape[2] == pair.scale * pair.lr.shape[2] &&
                   pair.hr.shape[3] == pair.scale * pair.lr.shape[3],
               "check_pair: '", pair.identifier, "' HR ", pair.hr.shape_str(),
               " is not exactly ", pair.scale, "x LR ", pair.lr.shape_str());
}

}  // namespace srtgan
