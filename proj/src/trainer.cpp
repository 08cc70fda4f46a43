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

#include "srtgan/trainer.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "srtgan/array_file.h"
#include "srtgan/augment.h"
#include "srtgan/losses.h"
#include "srtgan/resize.h"

namespace srtgan {

namespace {

// Independent derivation streams off the run seed. Epochs use
// kStreamEpochBase + epoch so every epoch's shuffle is reconstructible
// without replaying earlier ones.
enum Stream : std::uint64_t {
  kStreamGenInit = 1,
  kStreamDiscInit = 2,
  kStreamQaInit = 3,
  kStreamVggInit = 4,
  kStreamData = 5,
  kStreamEpochBase = 1000,
};

nn::Tensor<float> stack_members(const std::vector<ImagePair>& batch, bool hr) {
  const nn::Tensor<float>& first = hr ? batch[0].hr : batch[0].lr;
  const int b = int(batch.size());
  nn::Tensor<float> out({b, first.dim(1), first.dim(2), first.dim(3)});
  const size_t stride = first.data.size();
  for (int i = 0; i < b; ++i) {
    const nn::Tensor<float>& img = hr ? batch[size_t(i)].hr : batch[size_t(i)].lr;
    SRTGAN_CHECK(img.shape == first.shape,
                 "train_step: batch images must share one shape, got ",
                 img.shape_str(), " vs ", first.shape_str());
    std::copy(img.data.begin(), img.data.end(),
              out.data.begin() + int64_t(i) * int64_t(stride));
  }
  return out;
}

nn::Var<float> zero_scalar() {
  return nn::make_var(nn::Tensor<float>({1}, 0.0f));
}

std::string checkpoint_name(std::int64_t step) {
  std::ostringstream os;
  os << "checkpoint_";
  std::string digits = std::to_string(step);
  for (size_t i = digits.size(); i < 8; ++i) os << '0';
  os << digits << ".ckpt";
  return os.str();
}

std::int64_t meta_int(const ArrayFile& af, const std::string& key) {
  const std::string& text = af.get_meta(key);
  try {
    size_t used = 0;
    const std::int64_t v = std::stoll(text, &used);
    SRTGAN_CHECK(used == text.size(), "trailing junk");
    return v;
  } catch (const std::exception&) {
    fail("checkpoint meta '", key, "': '", text, "' is not an integer");
  }
}

}  // namespace

std::string step_record_line(const StepRecord& rec) {
  std::ostringstream os;
  os.precision(9);
  os << "step=" << rec.step << " content=" << rec.content << " qa=" << rec.qa
     << " gan_g=" << rec.gan_g << " perceptual=" << rec.perceptual
     << " fused_g=" << rec.fused_g << " gan_d=" << rec.gan_d
     << " fused_d=" << rec.fused_d;
  return os.str();
}

std::uint64_t params_hash(const nn::ParamMap<float>& m) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const void* p, size_t n) {
    const unsigned char* b = static_cast<const unsigned char*>(p);
    for (size_t i = 0; i < n; ++i) {
      h ^= b[i];
      h *= 1099511628211ull;
    }
  };
  for (const auto& [name, var] : m.params) {
    mix(name.data(), name.size());
    mix(var->value.data.data(), var->value.data.size() * sizeof(float));
  }
  for (const auto& [name, t] : m.buffers) {
    mix(name.data(), name.size());
    mix(t->data.data(), t->data.size() * sizeof(float));
  }
  return h;
}

ImageMetrics measure_pair(const std::string& identifier,
                          const nn::Tensor<float>& sr,
                          const nn::Tensor<float>& hr,
                          const VggExtractor<float>& vgg,
                          const LpipsCalibration& calib,
                          const MetricOptions& opt) {
  ImageMetrics m;
  m.identifier = identifier;
  const nn::Tensor<float> a = apply_metric_conventions(sr, opt);
  const nn::Tensor<float> b = apply_metric_conventions(hr, opt);
  m.psnr = psnr(a, b);
  m.ssim = ssim(a, b);
  MetricOptions rgb = opt;  // the perceptual distance always sees RGB
  rgb.y_channel = false;
  m.lpips = lpips(vgg, calib, apply_metric_conventions(sr, rgb),
                  apply_metric_conventions(hr, rgb));
  return m;
}

MetricsReport evaluate(const Generator<float>& gen, const PairDataset& data,
                       const VggExtractor<float>& vgg,
                       const LpipsCalibration& calib, const MetricOptions& opt,
                       std::map<std::string, std::string> metadata) {
  std::vector<ImageMetrics> records;
  records.reserve(data.size());
  for (size_t i = 0; i < data.size(); ++i) {
    const ImagePair pair = data.load(i);
    nn::Tensor<float> sr;
    {
      nn::NoGradGuard guard;
      sr = gen.forward(nn::make_var(pair.lr))->value;
    }
    for (float& v : sr.data) v = std::clamp(v, 0.0f, 1.0f);
    records.push_back(
        measure_pair(pair.identifier, sr, pair.hr, vgg, calib, opt));
  }
  metadata.emplace("channel_convention", opt.y_channel ? "y" : "rgb");
  metadata.emplace("border", std::to_string(opt.border));
  metadata.emplace("dataset_size", std::to_string(data.size()));
  return make_report(std::move(records), std::move(metadata));
}

Trainer::Trainer(TrainConfig cfg)
    : cfg_(std::move(cfg)),
      gen_(cfg_.gen),
      disc_(cfg_.disc),
      qa_(cfg_.qa),
      vgg_(cfg_.vgg),
      adam_g_(gen_.params(),
              {cfg_.lr_g, cfg_.beta1, cfg_.beta2, 1e-8}),
      adam_d_(disc_.params(),
              {cfg_.lr_d, cfg_.beta1, cfg_.beta2, 1e-8}),
      data_rng_(nn::Rng::derive(cfg_.seed, kStreamData)) {
  nn::Rng g_rng(nn::Rng::derive(cfg_.seed, kStreamGenInit));
  gen_.init(g_rng);
  nn::Rng d_rng(nn::Rng::derive(cfg_.seed, kStreamDiscInit));
  disc_.init(d_rng);
  if (!cfg_.qa_weights.empty()) {
    qa_.load(cfg_.qa_weights);
  } else {
    nn::Rng r(nn::Rng::derive(cfg_.seed, kStreamQaInit));
    qa_.init(r);
  }
  qa_.params().set_requires_grad(false);
  if (!cfg_.vgg_weights.empty()) {
    vgg_.load(cfg_.vgg_weights);
  } else {
    nn::Rng r(nn::Rng::derive(cfg_.seed, kStreamVggInit));
    vgg_.init_random(r);
  }
}

StepRecord Trainer::train_step(const std::vector<ImagePair>& batch) {
  SRTGAN_CHECK(!batch.empty(), "train_step: empty batch");
  StepRecord rec;
  rec.step = step_ + 1;
  const bool use_gan = cfg_.weights.gan != 0.0;
  const bool triplet = cfg_.gan_mode == "triplet";
  try {
    const nn::Tensor<float> lr = stack_members(batch, false);
    const nn::Tensor<float> hr = stack_members(batch, true);
    nn::Var<float> hr_v = nn::make_var(hr);
    nn::Var<float> neg_v;
    if (use_gan)
      neg_v = nn::make_var(bicubic_resize(lr, double(cfg_.gen.scale)));

    if (use_gan) {
      // The anchor is a constant for the discriminator phase; rebuilding it
      // per sub-step is pointless because G does not move in between.
      nn::Var<float> sr_const;
      {
        nn::NoGradGuard guard;
        sr_const = gen_.forward(nn::make_var(lr));
      }
      for (int k = 0; k < cfg_.d_steps_per_g; ++k) {
        TripletBatch<float> t{sr_const, hr_v, neg_v};
        nn::Var<float> gan_d =
            triplet ? gan_loss_discriminator(disc_, t, true, true)
                    : vanilla_gan_loss_discriminator(disc_, t, true, true);
        nn::Var<float> fused_d = fused_discriminator_loss(cfg_.weights, gan_d);
        adam_d_.zero_grad();
        nn::backward(fused_d);
        adam_d_.step();
        rec.gan_d = double(gan_d->value.data[0]);
        rec.fused_d = double(fused_d->value.data[0]);
      }
    }

    // Generator phase: the discriminator participates with batch statistics
    // but neither its parameters nor its running buffers move.
    disc_.params().set_requires_grad(false);
    nn::Var<float> sr = gen_.forward(nn::make_var(lr));
    nn::Var<float> content = cfg_.weights.content != 0.0
                                 ? content_loss(sr, hr_v)
                                 : zero_scalar();
    nn::Var<float> qa_term =
        cfg_.weights.qa != 0.0 ? qa_loss(qa_, sr, hr_v) : zero_scalar();
    nn::Var<float> perceptual = cfg_.weights.perceptual != 0.0
                                    ? perceptual_loss(vgg_, sr, hr_v)
                                    : zero_scalar();
    nn::Var<float> gan_g = zero_scalar();
    if (use_gan) {
      TripletBatch<float> t{sr, hr_v, neg_v};
      gan_g = triplet ? gan_loss_generator(disc_, t, true)
                      : vanilla_gan_loss_generator(disc_, t, true);
    }
    nn::Var<float> fused_g =
        fused_generator_loss(cfg_.weights, content, qa_term, gan_g, perceptual);
    adam_g_.zero_grad();
    nn::backward(fused_g);
    adam_g_.step();
    disc_.params().set_requires_grad(true);

    rec.content = double(content->value.data[0]);
    rec.qa = double(qa_term->value.data[0]);
    rec.gan_g = double(gan_g->value.data[0]);
    rec.perceptual = double(perceptual->value.data[0]);
    rec.fused_g = double(fused_g->value.data[0]);
  } catch (const Error& e) {
    disc_.params().set_requires_grad(true);
    fail("train step ", rec.step, ": ", e.what());
  }
  ++step_;
  return rec;
}

std::vector<ImagePair> Trainer::next_batch(const PairDataset& data) {
  const std::int64_t n = std::int64_t(data.size());
  std::vector<ImagePair> out;
  out.reserve(size_t(cfg_.batch_size));
  for (int i = 0; i < cfg_.batch_size; ++i) {
    if (cursor_ >= n) {
      ++epoch_;
      cursor_ = 0;
      order_.clear();
    }
    if (std::int64_t(order_.size()) != n) {
      order_.resize(size_t(n));
      std::iota(order_.begin(), order_.end(), 0);
      nn::Rng perm(
          nn::Rng::derive(cfg_.seed, kStreamEpochBase + std::uint64_t(epoch_)));
      for (std::int64_t j = n - 1; j > 0; --j)
        std::swap(order_[size_t(j)], order_[size_t(perm.uniform_int(j + 1))]);
    }
    ImagePair pair = data.load(size_t(order_[size_t(cursor_++)]));
    const AugmentationSpec spec = sample_augmentation(data_rng_, cfg_.crop_lr);
    out.push_back(augment(pair, spec, data_rng_));
  }
  return out;
}

TrainRunResult Trainer::train(const PairDataset& data,
                              const TrainRunOptions& opt) {
  SRTGAN_CHECK(data.size() > 0, "train: dataset is empty");
  SRTGAN_CHECK(!opt.out_dir.empty(), "train: out_dir is required");
  std::filesystem::create_directories(opt.out_dir);
  const std::string log_path = opt.out_dir + "/train.log";
  std::ofstream log(log_path, std::ios::app);
  SRTGAN_CHECK(log.good(), "train: cannot open log file '", log_path, "'");

  auto emit = [&](const std::string& line) {
    log << line << "\n";
    log.flush();
    SRTGAN_CHECK(log.good(), "train: writing '", log_path, "' failed");
    if (opt.echo) (*opt.echo) << line << "\n";
  };

  TrainRunResult result;
  while (step_ < cfg_.total_steps) {
    const std::vector<ImagePair> batch = next_batch(data);
    const StepRecord rec = train_step(batch);
    emit(step_record_line(rec));
    result.records.push_back(rec);
    if (step_ % cfg_.checkpoint_every == 0)
      save_checkpoint(opt.out_dir + "/" + checkpoint_name(step_));
    if (cfg_.validate_every > 0 && opt.validation &&
        step_ % cfg_.validate_every == 0) {
      const MetricsReport r = evaluate_on(*opt.validation, MetricOptions{});
      std::ostringstream os;
      os.precision(9);
      os << "step=" << step_ << " val_psnr=" << r.mean_psnr
         << " val_ssim=" << r.mean_ssim << " val_lpips=" << r.mean_lpips;
      emit(os.str());
    }
  }
  result.final_checkpoint = opt.out_dir + "/checkpoint_final.ckpt";
  save_checkpoint(result.final_checkpoint);
  return result;
}

nn::Tensor<float> Trainer::infer(const nn::Tensor<float>& lr) const {
  check_image(lr, "infer input");
  nn::NoGradGuard guard;
  nn::Tensor<float> out = gen_.forward(nn::make_var(lr))->value;
  for (float& v : out.data) v = std::clamp(v, 0.0f, 1.0f);
  return out;
}

void Trainer::save_checkpoint(const std::string& path) {
  ArrayFile af;
  af.meta["format"] = "srtgan-checkpoint";
  af.meta["version"] = "1";
  af.meta["step"] = std::to_string(step_);
  af.meta["epoch"] = std::to_string(epoch_);
  af.meta["cursor"] = std::to_string(cursor_);
  af.meta["config"] = canonical_config_text(cfg_);
  af.meta["config_hash"] = std::to_string(config_hash(cfg_));
  af.meta["data_rng"] = data_rng_.serialize();
  af.meta["adam_g_steps"] = std::to_string(adam_g_.step_count());
  af.meta["adam_d_steps"] = std::to_string(adam_d_.step_count());
  af.meta["critic_qa_hash"] = std::to_string(params_hash(qa_.params()));
  af.meta["critic_vgg_hash"] = std::to_string(params_hash(vgg_.params()));
  const nn::ParamMap<float> gp = gen_.params();
  for (const auto& [name, var] : gp.params) af.f32["param.g." + name] = var->value;
  const nn::ParamMap<float> dp = disc_.params();
  for (const auto& [name, var] : dp.params) af.f32["param.d." + name] = var->value;
  for (const auto& [name, t] : dp.buffers) af.f32["buffer.d." + name] = *t;
  for (size_t i = 0; i < adam_g_.size(); ++i) {
    af.f32["adam_g.m." + adam_g_.name(i)] = adam_g_.moment1(i);
    af.f32["adam_g.v." + adam_g_.name(i)] = adam_g_.moment2(i);
  }
  for (size_t i = 0; i < adam_d_.size(); ++i) {
    af.f32["adam_d.m." + adam_d_.name(i)] = adam_d_.moment1(i);
    af.f32["adam_d.v." + adam_d_.name(i)] = adam_d_.moment2(i);
  }
  af.save(path);
}

Trainer Trainer::from_checkpoint(const std::string& path,
                                 const TrainConfig* expected) {
  const ArrayFile af = ArrayFile::load(path);
  SRTGAN_CHECK(af.get_meta("format") == "srtgan-checkpoint", "checkpoint '",
               path, "': not a training checkpoint container");
  SRTGAN_CHECK(af.get_meta("version") == "1", "checkpoint '", path,
               "': unsupported format version ", af.get_meta("version"));
  TrainConfig cfg = parse_train_config(af.get_meta("config"));
  if (expected != nullptr) {
    const std::uint64_t got = config_hash(cfg);
    const std::uint64_t want = config_hash(*expected);
    if (got != want)
      fail_config("checkpoint '", path, "' was written under config hash ",
                  got, " but the supplied config hashes to ", want,
                  "; align the config or start a fresh run");
  }
  Trainer t(std::move(cfg));
  t.restore_from(af);
  return t;
}

void Trainer::restore_from(const ArrayFile& af) {
  auto fetch = [&af](const std::string& name, nn::Tensor<float>& dst) {
    const nn::Tensor<float>& src = af.get_f32(name);
    SRTGAN_CHECK(src.shape == dst.shape, "checkpoint array '", name,
                 "': shape ", src.shape_str(), " does not match expected ",
                 dst.shape_str());
    dst = src;
  };
  const nn::ParamMap<float> gp = gen_.params();
  for (const auto& [name, var] : gp.params) fetch("param.g." + name, var->value);
  const nn::ParamMap<float> dp = disc_.params();
  for (const auto& [name, var] : dp.params) fetch("param.d." + name, var->value);
  for (const auto& [name, t] : dp.buffers) fetch("buffer.d." + name, *t);
  for (size_t i = 0; i < adam_g_.size(); ++i) {
    fetch("adam_g.m." + adam_g_.name(i), adam_g_.moment1(i));
    fetch("adam_g.v." + adam_g_.name(i), adam_g_.moment2(i));
  }
  for (size_t i = 0; i < adam_d_.size(); ++i) {
    fetch("adam_d.m." + adam_d_.name(i), adam_d_.moment1(i));
    fetch("adam_d.v." + adam_d_.name(i), adam_d_.moment2(i));
  }
  adam_g_.set_step_count(meta_int(af, "adam_g_steps"));
  adam_d_.set_step_count(meta_int(af, "adam_d_steps"));
  step_ = meta_int(af, "step");
  epoch_ = meta_int(af, "epoch");
  cursor_ = meta_int(af, "cursor");
  order_.clear();
  data_rng_.deserialize(af.get_meta("data_rng"));
  SRTGAN_CHECK(af.get_meta("critic_qa_hash") ==
                   std::to_string(params_hash(qa_.params())),
               "checkpoint: frozen quality-critic parameters do not match the "
               "ones rebuilt from the config");
  SRTGAN_CHECK(af.get_meta("critic_vgg_hash") ==
                   std::to_string(params_hash(vgg_.params())),
               "checkpoint: frozen perceptual-extractor parameters do not "
               "match the ones rebuilt from the config");
}

MetricsReport Trainer::evaluate_on(const PairDataset& data,
                                   const MetricOptions& opt,
                                   const LpipsCalibration* calib) {
  LpipsCalibration uniform;
  if (calib == nullptr) {
    uniform = LpipsCalibration::uniform_for(vgg_.config().stage_channels);
    calib = &uniform;
  }
  return evaluate(gen_, data, vgg_, *calib, opt);
}

}  // namespace srtgan
