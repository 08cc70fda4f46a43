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

#include "srtgan/qa_network.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "srtgan/array_file.h"
#include "srtgan/augment.h"
#include "srtgan/error.h"
#include "srtgan/image.h"
#include "srtgan/nn/adam.h"

namespace srtgan {

using nn::Tensor;
using nn::Var;

template <typename T>
QANetwork<T>::QANetwork(QAConfig cfg) : cfg_(std::move(cfg)) {
  const int n = int(cfg_.block_channels.size());
  SRTGAN_CHECK(n >= 1, "QAConfig: need at least one block");
  SRTGAN_CHECK(cfg_.path_blocks >= 1 && cfg_.path_blocks <= n,
               "QAConfig: path_blocks must lie in [1, ", n, "], got ",
               cfg_.path_blocks);
  SRTGAN_CHECK(cfg_.fc_hidden >= 1, "QAConfig: fc_hidden must be positive");
  SRTGAN_CHECK(cfg_.dropout_rate >= 0.0 && cfg_.dropout_rate < 1.0,
               "QAConfig: dropout_rate must lie in [0,1)");
  SRTGAN_CHECK(cfg_.score_max > cfg_.score_min, "QAConfig: empty score range");
  int in_ch = 3;
  for (int i = 0; i < n; ++i) {
    const int out_ch = cfg_.block_channels[i];
    SRTGAN_CHECK(out_ch >= 1, "QAConfig: bad width at block ", i);
    conv_a.emplace_back(in_ch, out_ch, 3, 1, 1);
    conv_b.emplace_back(out_ch, out_ch, 3, 2, 1);
    in_ch = out_ch;
  }
  fc1 = nn::Linear<T>(in_ch, cfg_.fc_hidden);
  fc2 = nn::Linear<T>(cfg_.fc_hidden, 1);
}

template <typename T>
void QANetwork<T>::init(nn::Rng& rng) {
  const double g = std::sqrt(2.0);
  for (size_t i = 0; i < conv_a.size(); ++i) {
    conv_a[i].init(rng, g);
    conv_b[i].init(rng, g);
  }
  fc1.init(rng, g);
  fc2.init(rng, 1.0);
}

template <typename T>
Var<T> QANetwork<T>::block(int i, const Var<T>& x) const {
  return nn::relu(conv_b[i].forward(nn::relu(conv_a[i].forward(x))));
}

template <typename T>
Var<T> QANetwork<T>::forward(const Var<T>& primary, const Var<T>& reference,
                             bool training, nn::Rng* dropout_rng) {
  SRTGAN_CHECK(primary->value.ndim() == 4 && primary->value.shape[1] == 3,
               "qa_forward: expected [N,3,H,W], got ", primary->value.shape_str());
  SRTGAN_CHECK(primary->value.same_shape(reference->value),
               "qa_forward: path shapes differ, ", primary->value.shape_str(),
               " vs ", reference->value.shape_str());
  auto p = primary;
  auto r = reference;
  for (int i = 0; i < cfg_.path_blocks; ++i) {
    p = block(i, p);
    r = block(i, r);
  }
  auto d = nn::sub(p, r);
  for (int i = cfg_.path_blocks; i < int(conv_a.size()); ++i) d = block(i, d);
  const int n = d->value.shape[0];
  const int c = d->value.shape[1];
  auto h = nn::reshape(nn::global_avg_pool(d), {n, c});
  h = nn::relu(fc1.forward(h));
  if (training && cfg_.dropout_rate > 0) {
    SRTGAN_CHECK(dropout_rng != nullptr,
                 "qa_forward: training with dropout needs an rng");
    h = nn::dropout(h, T(cfg_.dropout_rate), *dropout_rng, true);
  }
  auto s = fc2.forward(h);
  return nn::affine(nn::sigmoid(s), T(cfg_.score_max - cfg_.score_min),
                    T(cfg_.score_min));
}

template <typename T>
nn::ParamMap<T> QANetwork<T>::params() {
  nn::ParamMap<T> m;
  for (size_t i = 0; i < conv_a.size(); ++i) {
    conv_a[i].register_into(m, "qa.block" + std::to_string(i) + ".conv0");
    conv_b[i].register_into(m, "qa.block" + std::to_string(i) + ".conv1");
  }
  fc1.register_into(m, "qa.fc1");
  fc2.register_into(m, "qa.fc2");
  return m;
}

template <typename T>
void QANetwork<T>::load(const std::string& path) {
  const ArrayFile af = ArrayFile::load(path);
  auto m = params();
  for (auto& [name, var] : m.params) {
    const auto& src = af.get_f32(name);
    SRTGAN_CHECK(src.shape == var->value.shape, "qa weights: '", name,
                 "' has shape ", Tensor<float>::shape_str_of(src.shape),
                 ", expected ", var->value.shape_str());
    var->value = src.template cast<T>();
  }
}

template <typename T>
void QANetwork<T>::save(const std::string& path) const {
  ArrayFile af;
  af.meta["kind"] = "qa_network";
  auto m = const_cast<QANetwork<T>*>(this)->params();
  for (const auto& [name, var] : m.params)
    af.f32[name] = var->value.template cast<float>();
  af.save(path);
}

template class QANetwork<float>;
template class QANetwork<double>;

QASplit split_qa_records(const std::vector<QARecord>& records, nn::Rng& rng) {
  SRTGAN_CHECK(!records.empty(), "qa split: no records");
  // Group indices by reference image, keeping first-appearance order so the
  // shuffle is the only source of randomness.
  std::vector<std::string> refs;
  std::map<std::string, std::vector<size_t>> by_ref;
  for (size_t i = 0; i < records.size(); ++i) {
    auto [it, fresh] = by_ref.try_emplace(records[i].reference_path);
    if (fresh) refs.push_back(records[i].reference_path);
    it->second.push_back(i);
  }
  for (size_t i = refs.size(); i > 1; --i)
    std::swap(refs[i - 1], refs[rng.uniform_int(i)]);
  const size_t n = refs.size();
  const size_t n_train = size_t(0.7 * double(n));
  const size_t n_val = size_t(0.1 * double(n));
  SRTGAN_CHECK(n_train >= 1 && n - n_train - n_val >= 1,
               "qa split: ", n, " reference group(s) is too few to split");
  QASplit out;
  for (size_t g = 0; g < n; ++g) {
    auto& dst =
        g < n_train ? out.train : (g < n_train + n_val ? out.val : out.test);
    for (size_t i : by_ref[refs[g]]) dst.push_back(records[i]);
  }
  return out;
}

namespace {

// One record loaded and center-consistent: both images share the crop window.
struct QAItem {
  Tensor<float> distorted, reference;
  double mos = 0.0;
};

QAItem load_qa_item(const QARecord& rec, int patch, nn::Rng* crop_rng) {
  QAItem item;
  item.distorted = load_image(rec.distorted_path);
  item.reference = load_image(rec.reference_path);
  item.mos = rec.mos;
  SRTGAN_CHECK(item.distorted.same_shape(item.reference),
               "qa record '", rec.distorted_path, "': image sizes differ");
  const int h = item.distorted.shape[2], w = item.distorted.shape[3];
  SRTGAN_CHECK(h >= patch && w >= patch, "qa record '", rec.distorted_path,
               "': image ", h, "x", w, " smaller than the ", patch,
               " pixel training patch");
  const int y = crop_rng ? int(crop_rng->uniform_int(h - patch + 1))
                         : (h - patch) / 2;
  const int x = crop_rng ? int(crop_rng->uniform_int(w - patch + 1))
                         : (w - patch) / 2;
  item.distorted = crop(item.distorted, y, x, patch, patch);
  item.reference = crop(item.reference, y, x, patch, patch);
  return item;
}

template <typename T>
void stack_into(Tensor<T>& batch, int slot, const Tensor<float>& img) {
  const int64_t plane = img.numel();
  for (int64_t i = 0; i < plane; ++i)
    batch.data[int64_t(slot) * plane + i] = T(img.data[i]);
}

// Mean squared score error over a record list, dropout off, no graph.
template <typename T>
double split_mse(QANetwork<T>& net, const std::vector<QARecord>& recs,
                 int patch) {
  if (recs.empty()) return 0.0;
  nn::NoGradGuard guard;
  double se = 0.0;
  for (const auto& rec : recs) {
    const QAItem item = load_qa_item(rec, patch, nullptr);
    auto p = nn::make_var(item.distorted.template cast<T>(), false);
    auto r = nn::make_var(item.reference.template cast<T>(), false);
    const double q = double(net.forward(p, r)->value.data[0]);
    se += (q - item.mos) * (q - item.mos);
  }
  return se / double(recs.size());
}

}  // namespace

template <typename T>
QATrainReport qa_train(QANetwork<T>& net, const std::vector<QARecord>& records,
                       const QATrainOptions& opt) {
  SRTGAN_CHECK(opt.epochs >= 1 && opt.batch_size >= 1 && opt.patch >= 4,
               "qa_train: bad schedule");
  for (const auto& rec : records)
    SRTGAN_CHECK(rec.mos >= 1.0 && rec.mos <= 5.0, "qa_train: MOS ", rec.mos,
                 " for '", rec.distorted_path, "' outside [1,5]");
  nn::Rng split_rng(nn::Rng::derive(opt.seed, 1));
  QASplit split = split_qa_records(records, split_rng);
  SRTGAN_CHECK(!split.train.empty() && !split.test.empty(),
               "qa_train: empty split");

  auto pmap = net.params();
  typename nn::Adam<T>::Config acfg;
  acfg.lr = T(opt.lr);
  nn::Adam<T> adam(pmap, acfg);

  QATrainReport report;
  double mos_sum = 0.0;
  for (const auto& rec : split.train) mos_sum += rec.mos;
  report.train_mean_mos = mos_sum / double(split.train.size());

  for (int epoch = 0; epoch < opt.epochs; ++epoch) {
    nn::Rng epoch_rng(nn::Rng::derive(opt.seed, 100 + uint64_t(epoch)));
    nn::Rng dropout_rng(nn::Rng::derive(opt.seed, 900 + uint64_t(epoch)));
    std::vector<size_t> order(split.train.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[epoch_rng.uniform_int(i)]);

    double epoch_se = 0.0;
    int64_t epoch_n = 0;
    for (size_t start = 0; start < order.size(); start += size_t(opt.batch_size)) {
      const int b = int(std::min(order.size() - start, size_t(opt.batch_size)));
      Tensor<T> prim({b, 3, opt.patch, opt.patch});
      Tensor<T> ref({b, 3, opt.patch, opt.patch});
      Tensor<T> mos({b, 1});
      for (int s = 0; s < b; ++s) {
        const QAItem item =
            load_qa_item(split.train[order[start + s]], opt.patch, &epoch_rng);
        stack_into(prim, s, item.distorted);
        stack_into(ref, s, item.reference);
        mos.data[s] = T(item.mos);
      }
      auto scores = net.forward(nn::make_var(std::move(prim), false),
                                nn::make_var(std::move(ref), false),
                                /*training=*/true, &dropout_rng);
      auto loss = nn::mean_all(nn::square(
          nn::sub(scores, nn::make_var(std::move(mos), false))));
      adam.zero_grad();
      nn::backward(loss);
      adam.step();
      epoch_se += double(loss->value.data[0]) * b;
      epoch_n += b;
    }
    report.epoch_train_mse.push_back(epoch_se / double(epoch_n));
  }

  report.train_mse = split_mse(net, split.train, opt.patch);
  report.val_mse = split_mse(net, split.val, opt.patch);
  report.test_mse = split_mse(net, split.test, opt.patch);
  double base_se = 0.0;
  for (const auto& rec : split.test) {
    const double d = rec.mos - report.train_mean_mos;
    base_se += d * d;
  }
  report.baseline_test_mse = base_se / double(split.test.size());
  if (!opt.out_path.empty()) net.save(opt.out_path);
  return report;
}

template QATrainReport qa_train(QANetwork<float>&, const std::vector<QARecord>&,
                                const QATrainOptions&);
template QATrainReport qa_train(QANetwork<double>&,
                                const std::vector<QARecord>&,
                                const QATrainOptions&);

}  // namespace srtgan
