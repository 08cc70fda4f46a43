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
//
// srtgan: train / infer / eval / qa-train / compare-degradation.
//
// Exit codes: 0 success, 1 runtime failure, 2 bad usage or configuration.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "srtgan/augment.h"
#include "srtgan/config.h"
#include "srtgan/dataset.h"
#include "srtgan/error.h"
#include "srtgan/image.h"
#include "srtgan/metrics.h"
#include "srtgan/qa_network.h"
#include "srtgan/resize.h"
#include "srtgan/trainer.h"

namespace fs = std::filesystem;

namespace srtgan {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

// Entropy for runs the user left unseeded. The drawn value is always
// printed so the run can be reproduced with --seed.
std::uint64_t draw_seed() {
  std::random_device rd;
  return (std::uint64_t(rd()) << 32) ^ std::uint64_t(rd());
}

struct TrainArgs {
  std::string config;
  std::string data_root;
  std::string val_root;
  std::string out_dir;
  std::string resume;
  std::vector<std::string> overrides;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

int run_train_loop(Trainer& trainer, const PairDataset& data,
                   const PairDataset* validation, const std::string& out_dir) {
  TrainRunOptions opt;
  opt.out_dir = out_dir;
  opt.validation = validation;
  opt.echo = &std::cout;
  TrainRunResult res = trainer.train(data, opt);
  std::cout << "final checkpoint: " << res.final_checkpoint << "\n";
  return kExitOk;
}

int run_train(const TrainArgs& a) {
  std::vector<std::string> overrides = a.overrides;
  if (a.seed_given) overrides.push_back("train.seed=" + std::to_string(a.seed));
  TrainConfig cfg = load_train_config(a.config, overrides);
  if (!cfg.seed_given) {
    cfg.seed = draw_seed();
    std::cout << "seed " << cfg.seed << " (drawn; pass --seed " << cfg.seed
              << " to reproduce)\n";
  }
  if (a.data_root.empty())
    fail_config("train: no --data-root given and SRTGAN_DATA_ROOT is unset");
  if (a.out_dir.empty()) fail_config("train: --out-dir is required");

  PairDataset data = PairDataset::open(a.data_root);
  std::optional<PairDataset> val;
  if (!a.val_root.empty()) val.emplace(PairDataset::open(a.val_root));
  const PairDataset* val_ptr = val ? &*val : nullptr;

  if (a.resume.empty()) {
    Trainer trainer(cfg);
    return run_train_loop(trainer, data, val_ptr, a.out_dir);
  }
  Trainer trainer = Trainer::from_checkpoint(a.resume, &cfg);
  std::cout << "resumed " << a.resume << " at step " << trainer.step() << "\n";
  return run_train_loop(trainer, data, val_ptr, a.out_dir);
}

struct InferArgs {
  std::string checkpoint;
  std::string input;
  std::string output;
};

bool has_image_extension(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return char(std::tolower(c)); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg" || ext == ".bmp";
}

int run_infer(const InferArgs& a) {
  Trainer trainer = Trainer::from_checkpoint(a.checkpoint);

  std::vector<fs::path> inputs;
  fs::path in(a.input);
  if (fs::is_directory(in)) {
    for (const auto& entry : fs::directory_iterator(in))
      if (entry.is_regular_file() && has_image_extension(entry.path()))
        inputs.push_back(entry.path());
    std::sort(inputs.begin(), inputs.end());
    SRTGAN_CHECK(!inputs.empty(), "infer: no images under ", a.input);
  } else {
    SRTGAN_CHECK(fs::exists(in), "infer: input not found: ", a.input);
    inputs.push_back(in);
  }

  fs::create_directories(a.output);
  for (const auto& p : inputs) {
    nn::Tensor<float> sr = trainer.infer(load_image(p.string()));
    fs::path out = fs::path(a.output) / (p.stem().string() + "_SR.png");
    save_image_png(out.string(), sr);
    std::cout << p.string() << " -> " << out.string() << " (" << sr.shape[3]
              << "x" << sr.shape[2] << ")\n";
  }
  return kExitOk;
}

struct EvalArgs {
  std::string checkpoint;
  std::string dataset;
  std::string report;
  std::string convention = "rgb";
  std::string lpips;
  int border = 0;
};

int run_eval(const EvalArgs& a) {
  Trainer trainer = Trainer::from_checkpoint(a.checkpoint);
  PairDataset data = PairDataset::open(a.dataset);

  MetricOptions opt;
  opt.y_channel = (a.convention == "y");
  opt.border = a.border;

  std::map<std::string, std::string> metadata;
  metadata["checkpoint"] = a.checkpoint;
  metadata["dataset"] = a.dataset;
  LpipsCalibration calib;
  if (a.lpips.empty()) {
    calib = LpipsCalibration::uniform_for(trainer.vgg().config().stage_channels);
    metadata["lpips_calibration"] = "uniform stand-in";
  } else {
    calib = LpipsCalibration::load(a.lpips);
    metadata["lpips_calibration"] = a.lpips;
  }

  MetricsReport report = evaluate(trainer.generator(), data, trainer.vgg(),
                                  calib, opt, std::move(metadata));
  {
    std::ofstream os(a.report);
    SRTGAN_CHECK(os.good(), "eval: cannot write report: ", a.report);
    os << report_to_json(report) << "\n";
    SRTGAN_CHECK(os.good(), "eval: short write: ", a.report);
  }
  std::cout << report_to_table(report);
  std::cout << "report written to " << a.report << "\n";
  return kExitOk;
}

struct QaTrainArgs {
  std::string manifest;
  std::string out;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int epochs = 4;
  int batch_size = 8;
  int patch = 64;
  double lr = 1e-4;
  std::vector<int> channels = {32, 64, 128, 256};
  int path_blocks = 2;
  int fc_hidden = 64;
};

int run_qa_train(const QaTrainArgs& a) {
  std::vector<QARecord> records = load_qa_manifest(a.manifest);
  std::uint64_t seed = a.seed_given ? a.seed : draw_seed();
  if (!a.seed_given)
    std::cout << "seed " << seed << " (drawn; pass --seed " << seed
              << " to reproduce)\n";

  QAConfig qcfg;
  qcfg.block_channels = a.channels;
  qcfg.path_blocks = a.path_blocks;
  qcfg.fc_hidden = a.fc_hidden;
  QANetwork<float> net(qcfg);
  nn::Rng init_rng(nn::Rng::derive(seed, 0));
  net.init(init_rng);

  QATrainOptions opt;
  opt.epochs = a.epochs;
  opt.batch_size = a.batch_size;
  opt.patch = a.patch;
  opt.lr = a.lr;
  opt.seed = seed;
  opt.out_path = a.out;
  QATrainReport rep = qa_train(net, records, opt);

  for (size_t i = 0; i < rep.epoch_train_mse.size(); ++i)
    std::cout << "epoch " << (i + 1) << " train_mse " << rep.epoch_train_mse[i]
              << "\n";
  std::cout << "train_mse " << rep.train_mse << "\n"
            << "val_mse " << rep.val_mse << "\n"
            << "test_mse " << rep.test_mse << "\n"
            << "baseline_test_mse " << rep.baseline_test_mse
            << " (constant predictor at mean MOS " << rep.train_mean_mos
            << ")\n";

  nlohmann::json j;
  j["seed"] = seed;
  j["records"] = records.size();
  j["epoch_train_mse"] = rep.epoch_train_mse;
  j["train_mse"] = rep.train_mse;
  j["val_mse"] = rep.val_mse;
  j["test_mse"] = rep.test_mse;
  j["train_mean_mos"] = rep.train_mean_mos;
  j["baseline_test_mse"] = rep.baseline_test_mse;
  const std::string report_path = a.out + ".report.json";
  {
    std::ofstream os(report_path);
    SRTGAN_CHECK(os.good(), "qa-train: cannot write report: ", report_path);
    os << j.dump(2) << "\n";
  }
  std::cout << "weights written to " << a.out << ", report to " << report_path
            << "\n";
  return kExitOk;
}

struct CompareArgs {
  std::string hr;
  std::string lr;
  std::string out;
  std::string patch;
};

struct PatchRect {
  int x = 0, y = 0, w = 0, h = 0;
};

PatchRect parse_patch(const std::string& text) {
  std::vector<int> v;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string piece = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    int value = 0;
    const char* first = piece.data();
    const char* last = piece.data() + piece.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last)
      fail_config("compare-degradation: --patch wants x,y,w,h integers, got '",
                  text, "'");
    v.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (v.size() != 4)
    fail_config("compare-degradation: --patch wants x,y,w,h integers, got '",
                text, "'");
  return {v[0], v[1], v[2], v[3]};
}

// Rounds to the 8-bit grid PNG storage uses, so a patch compared against a
// losslessly saved copy of itself measures as identical.
nn::Tensor<float> quantize8(nn::Tensor<float> img) {
  for (float& v : img.data) {
    float c = std::min(1.0f, std::max(0.0f, v));
    v = std::round(c * 255.0f) / 255.0f;
  }
  return img;
}

int run_compare(const CompareArgs& a) {
  nn::Tensor<float> hr = load_image(a.hr);
  nn::Tensor<float> lr = load_image(a.lr);
  PatchRect r = parse_patch(a.patch);

  const int lh = lr.shape[2], lw = lr.shape[3];
  if (r.x < 0 || r.y < 0 || r.w < 1 || r.h < 1 || r.x + r.w > lw ||
      r.y + r.h > lh)
    fail_config("compare-degradation: patch ", a.patch,
                " falls outside the ", lw, "x", lh, " LR image");

  nn::Tensor<float> bicubic_lr = bicubic_resize_to(hr, lh, lw);
  nn::Tensor<float> patch_true = quantize8(crop(lr, r.y, r.x, r.h, r.w));
  nn::Tensor<float> patch_bicubic =
      quantize8(crop(bicubic_lr, r.y, r.x, r.h, r.w));

  double ps = psnr(patch_true, patch_bicubic);
  double ss = ssim(patch_true, patch_bicubic);

  // True-degradation patch on the left, bicubic-downsampled HR on the
  // right, separated by a white gutter.
  const int gap = 4;
  nn::Tensor<float> plot({1, 3, r.h, 2 * r.w + gap}, 1.0f);
  for (int c = 0; c < 3; ++c)
    for (int y = 0; y < r.h; ++y)
      for (int x = 0; x < r.w; ++x) {
        plot.at4(0, c, y, x) = patch_true.at4(0, c, y, x);
        plot.at4(0, c, y, r.w + gap + x) = patch_bicubic.at4(0, c, y, x);
      }
  save_image_png(a.out, plot);

  std::cout << "patch " << r.w << "x" << r.h << " at (" << r.x << "," << r.y
            << "), true degradation vs bicubic\n";
  std::cout << "psnr=" << ps << " ssim=" << ss << "\n";
  std::cout << "plot written to " << a.out << "\n";
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"x4 single-image super-resolution with a triplet-loss GAN",
               "srtgan"};
  app.require_subcommand(1);

  TrainArgs ta;
  CLI::App* train = app.add_subcommand(
      "train", "Optimize a generator/discriminator pair on LR/HR image pairs");
  train->add_option("--config", ta.config, "training configuration file (INI)")
      ->required();
  train->add_option("--data-root", ta.data_root,
                    "paired dataset directory (defaults to $SRTGAN_DATA_ROOT)")
      ->envname("SRTGAN_DATA_ROOT");
  train->add_option("--val-root", ta.val_root,
                    "held-out paired dataset for periodic validation");
  train->add_option("--out-dir", ta.out_dir,
                    "directory for checkpoints and train.log")
      ->required();
  train->add_option("--resume", ta.resume,
                    "checkpoint to continue from (config hash must match)");
  CLI::Option* train_seed =
      train->add_option("--seed", ta.seed,
                        "overrides train.seed; unseeded runs draw and print one");
  train->add_option("--set", ta.overrides,
                    "section.key=value config override, repeatable");

  InferArgs ia;
  CLI::App* infer = app.add_subcommand(
      "infer", "Restore one image or a directory of images at x4");
  infer->add_option("--checkpoint", ia.checkpoint, "trained checkpoint")
      ->required();
  infer->add_option("--input", ia.input, "LR image file or directory")
      ->required();
  infer->add_option("--output", ia.output,
                    "output directory; each input yields {name}_SR.png")
      ->required();

  EvalArgs ea;
  CLI::App* eval = app.add_subcommand(
      "eval", "Score a checkpoint on a paired dataset (PSNR/SSIM/LPIPS)");
  eval->add_option("--checkpoint", ea.checkpoint, "trained checkpoint")
      ->required();
  eval->add_option("--dataset", ea.dataset, "paired dataset directory")
      ->required();
  eval->add_option("--report", ea.report, "JSON report destination")
      ->required();
  eval->add_option("--convention", ea.convention,
                   "fidelity-metric channel convention")
      ->check(CLI::IsMember({"rgb", "y"}));
  eval->add_option("--border", ea.border, "pixels cropped from every side")
      ->check(CLI::NonNegativeNumber);
  eval->add_option("--lpips", ea.lpips,
                   "LPIPS calibration artifact; absent uses the uniform "
                   "stand-in and records that in the report");

  QaTrainArgs qa;
  CLI::App* qat = app.add_subcommand(
      "qa-train", "Fit the quality scorer to a (ref,dist,MOS) manifest");
  qat->add_option("--manifest", qa.manifest, "CSV manifest of scored pairs")
      ->required();
  qat->add_option("--out", qa.out, "weight artifact destination")->required();
  CLI::Option* qa_seed =
      qat->add_option("--seed", qa.seed,
                      "split/init/order seed; unseeded runs draw and print one");
  qat->add_option("--epochs", qa.epochs, "training epochs")
      ->check(CLI::PositiveNumber);
  qat->add_option("--batch-size", qa.batch_size, "records per step")
      ->check(CLI::PositiveNumber);
  qat->add_option("--patch", qa.patch, "square crop fed to the scorer")
      ->check(CLI::PositiveNumber);
  qat->add_option("--lr", qa.lr, "Adam learning rate");
  qat->add_option("--channels", qa.channels, "block channel widths")
      ->delimiter(',');
  qat->add_option("--path-blocks", qa.path_blocks,
                  "blocks applied before the paths join")
      ->check(CLI::PositiveNumber);
  qat->add_option("--fc-hidden", qa.fc_hidden, "regression head width")
      ->check(CLI::PositiveNumber);

  CompareArgs ca;
  CLI::App* cmp = app.add_subcommand(
      "compare-degradation",
      "Contrast a camera LR patch with the bicubic-downsampled HR patch");
  cmp->add_option("--hr", ca.hr, "high-resolution image")->required();
  cmp->add_option("--lr", ca.lr, "paired low-resolution image")->required();
  cmp->add_option("--out", ca.out, "side-by-side plot destination (PNG)")
      ->required();
  cmp->add_option("--patch", ca.patch, "x,y,w,h window in LR pixels")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n";
    const CLI::App* failing = &app;
    while (!failing->get_subcommands().empty())
      failing = failing->get_subcommands().front();
    std::cerr << failing->help();
    return kExitUsage;
  }

  ta.seed_given = train_seed->count() > 0;
  qa.seed_given = qa_seed->count() > 0;

  try {
    if (*train) return run_train(ta);
    if (*infer) return run_infer(ia);
    if (*eval) return run_eval(ea);
    if (*qat) return run_qa_train(qa);
    if (*cmp) return run_compare(ca);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace srtgan

int main(int argc, char** argv) { return srtgan::run(argc, argv); }
