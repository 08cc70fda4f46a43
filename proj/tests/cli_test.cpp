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
// End-to-end checks of the srtgan binary: exit codes, seed reporting, and
// the artifacts every subcommand leaves on disk. The binary path comes in
// through SRTGAN_CLI_PATH.

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "srtgan/image.h"
#include "srtgan/resize.h"
#include "test_data.h"
#include "test_util.h"

namespace srtgan {
namespace {

using testutil::TempDir;
using testutil::synth_image;
using testutil::write_sr_dataset;

struct CliResult {
  int code = -1;
  std::string out;  // stdout and stderr, interleaved
};

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

// `prefix` lands before the binary, e.g. a VAR=value environment override.
CliResult run_cli(const TempDir& dir, const std::string& args,
                  const std::string& prefix = "") {
  static int counter = 0;
  const std::string capture =
      dir.file("cli_capture_" + std::to_string(counter++) + ".txt");
  std::string cmd = prefix + (prefix.empty() ? "" : " ") + SRTGAN_CLI_PATH +
                    " " + args + " > " + capture + " 2>&1";
  int rc = std::system(cmd.c_str());
  CliResult res;
  res.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  res.out = read_file(capture);
  return res;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// Small but complete run configuration; three steps, checkpoint every two.
void write_tiny_config(const std::string& path, bool with_seed = true) {
  std::ofstream os(path);
  os << "[model]\n"
     << "base_channels = 8\n"
     << "n_rir = 2\n"
     << "resblocks_per_rir = 1\n"
     << "convs_per_resblock = 2\n"
     << "ca_reduction = 2\n"
     << "disc_base_channels = 8\n"
     << "[critics]\n"
     << "qa_channels = 8,16\n"
     << "qa_path_blocks = 1\n"
     << "qa_fc_hidden = 8\n"
     << "vgg_channels = 8,16\n"
     << "vgg_convs = 1,1\n"
     << "[train]\n"
     << "batch_size = 2\n"
     << "crop_lr = 18\n"
     << "total_steps = 3\n"
     << "checkpoint_every = 2\n";
  if (with_seed) os << "seed = 9\n";
}

TEST_CASE("help exits zero on every command") {
  TempDir dir("cli_help");
  for (const char* cmd :
       {"--help", "train --help", "infer --help", "eval --help",
        "qa-train --help", "compare-degradation --help"}) {
    CliResult r = run_cli(dir, cmd);
    CAPTURE(cmd);
    CHECK(r.code == 0);
  }
  CHECK(contains(run_cli(dir, "train --help").out, "--out-dir"));
  CHECK(contains(run_cli(dir, "eval --help").out, "--convention"));
}

TEST_CASE("usage errors exit two with usage text") {
  TempDir dir("cli_usage");
  CliResult missing = run_cli(dir, "train");
  CHECK(missing.code == 2);
  CHECK(contains(missing.out, "--config"));
  CHECK(contains(missing.out, "Usage:"));

  CHECK(run_cli(dir, "no-such-command").code == 2);
  CHECK(run_cli(dir, "").code == 2);

  CliResult bad_convention = run_cli(
      dir, "eval --checkpoint x --dataset y --report z --convention bgr");
  CHECK(bad_convention.code == 2);
}

TEST_CASE("train smoke run leaves checkpoints and a log") {
  TempDir dir("cli_train");
  const std::string data = write_sr_dataset(dir.file("data"), 3, 18);
  const std::string cfg = dir.file("run.ini");
  write_tiny_config(cfg);
  const std::string out = dir.file("out");

  CliResult r = run_cli(dir, "train --config " + cfg + " --data-root " + data +
                                 " --out-dir " + out);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "step=1 content="));
  CHECK(contains(r.out, "final checkpoint:"));
  CHECK_FALSE(contains(r.out, "(drawn"));
  CHECK(std::filesystem::exists(out + "/checkpoint_00000002.ckpt"));
  CHECK(std::filesystem::exists(out + "/checkpoint_final.ckpt"));
  const std::string log = read_file(out + "/train.log");
  CHECK(contains(log, "step=3 "));
}

TEST_CASE("unseeded train draws a seed and honors SRTGAN_DATA_ROOT") {
  TempDir dir("cli_unseeded");
  const std::string data = write_sr_dataset(dir.file("data"), 2, 18);
  const std::string cfg = dir.file("run.ini");
  write_tiny_config(cfg, /*with_seed=*/false);

  std::ofstream(cfg, std::ios::app) << "total_steps = 1\n";
  CliResult r =
      run_cli(dir, "train --config " + cfg + " --out-dir " + dir.file("out"),
              "SRTGAN_DATA_ROOT=" + data);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "(drawn"));

  // Without the environment variable the same invocation is a usage error.
  CliResult bare = run_cli(
      dir, "train --config " + cfg + " --out-dir " + dir.file("out2"),
      "env -u SRTGAN_DATA_ROOT");
  CHECK(bare.code == 2);
  CHECK(contains(bare.out, "SRTGAN_DATA_ROOT"));
}

TEST_CASE("resume honors the config hash guard") {
  TempDir dir("cli_resume");
  const std::string data = write_sr_dataset(dir.file("data"), 3, 18);
  const std::string cfg = dir.file("run.ini");
  write_tiny_config(cfg);
  const std::string out = dir.file("out");
  REQUIRE(run_cli(dir, "train --config " + cfg + " --data-root " + data +
                           " --out-dir " + out)
              .code == 0);
  const std::string ckpt = out + "/checkpoint_00000002.ckpt";
  REQUIRE(std::filesystem::exists(ckpt));

  CliResult tampered = run_cli(
      dir, "train --config " + cfg + " --data-root " + data + " --out-dir " +
               out + " --resume " + ckpt + " --set optimizer.lr_g=0.0003");
  CHECK(tampered.code == 2);
  CHECK(contains(tampered.out, "config hash"));

  CliResult resumed =
      run_cli(dir, "train --config " + cfg + " --data-root " + data +
                       " --out-dir " + dir.file("out_b") + " --resume " + ckpt);
  CHECK(resumed.code == 0);
  CHECK(contains(resumed.out, "resumed"));
  CHECK(contains(resumed.out, "step=3 "));
}

TEST_CASE("infer writes x4 outputs for files and directories") {
  TempDir dir("cli_infer");
  const std::string data = write_sr_dataset(dir.file("data"), 2, 18);
  const std::string cfg = dir.file("run.ini");
  write_tiny_config(cfg);
  const std::string out = dir.file("out");
  REQUIRE(run_cli(dir, "train --config " + cfg + " --data-root " + data +
                           " --out-dir " + out)
              .code == 0);
  const std::string ckpt = out + "/checkpoint_final.ckpt";

  std::filesystem::create_directories(dir.file("in"));
  save_image_png(dir.file("in/a.png"), synth_image(12, 10, 5));
  save_image_png(dir.file("in/b.png"), synth_image(8, 8, 6));

  CliResult single = run_cli(dir, "infer --checkpoint " + ckpt + " --input " +
                                      dir.file("in/a.png") + " --output " +
                                      dir.file("sr_one"));
  CHECK(single.code == 0);
  nn::Tensor<float> sr = load_image(dir.file("sr_one/a_SR.png"));
  CHECK(sr.shape == std::vector<int>{1, 3, 48, 40});

  CliResult batch = run_cli(dir, "infer --checkpoint " + ckpt + " --input " +
                                     dir.file("in") + " --output " +
                                     dir.file("sr_all"));
  CHECK(batch.code == 0);
  CHECK(std::filesystem::exists(dir.file("sr_all/a_SR.png")));
  CHECK(std::filesystem::exists(dir.file("sr_all/b_SR.png")));

  CliResult gone = run_cli(dir, "infer --checkpoint " + dir.file("nope.ckpt") +
                                    " --input " + dir.file("in/a.png") +
                                    " --output " + dir.file("sr_x"));
  CHECK(gone.code == 1);
  CHECK(contains(gone.out, "nope.ckpt"));
}

TEST_CASE("eval writes a report and prints the table") {
  TempDir dir("cli_eval");
  const std::string data = write_sr_dataset(dir.file("data"), 2, 18);
  const std::string cfg = dir.file("run.ini");
  write_tiny_config(cfg);
  const std::string out = dir.file("out");
  REQUIRE(run_cli(dir, "train --config " + cfg + " --data-root " + data +
                           " --out-dir " + out)
              .code == 0);
  const std::string ckpt = out + "/checkpoint_final.ckpt";
  const std::string report = dir.file("report.json");

  CliResult r = run_cli(dir, "eval --checkpoint " + ckpt + " --dataset " +
                                 data + " --report " + report);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PSNR"));
  CHECK(contains(r.out, "mean"));
  const std::string json = read_file(report);
  CHECK(contains(json, "mean_psnr"));
  CHECK(contains(json, "uniform stand-in"));

  CliResult y = run_cli(dir, "eval --checkpoint " + ckpt + " --dataset " +
                                 data + " --report " + report +
                                 " --convention y --border 4");
  CHECK(y.code == 0);
  CHECK(contains(read_file(report), "\"y\""));
}

TEST_CASE("qa-train fits the scorer and reports split errors") {
  TempDir dir("cli_qa");
  std::filesystem::create_directories(dir.file("imgs"));
  std::ostringstream manifest;
  manifest << "reference_path,distorted_path,mos\n";
  for (int g = 0; g < 2; ++g) {
    nn::Tensor<float> ref = synth_image(40, 40, 30 + g);
    const std::string ref_name = "imgs/ref" + std::to_string(g) + ".png";
    save_image_png(dir.file(ref_name), ref);
    for (int d = 0; d < 3; ++d) {
      nn::Tensor<float> dist = ref;
      nn::Rng noise(nn::Rng::derive(uint64_t(g * 3 + d), 11));
      for (float& v : dist.data)
        v = std::min(1.0f,
                     std::max(0.0f, v + float(0.03 * (d + 1) * noise.normal())));
      const std::string dist_name =
          "imgs/dist" + std::to_string(g) + "_" + std::to_string(d) + ".png";
      save_image_png(dir.file(dist_name), dist);
      manifest << ref_name << "," << dist_name << "," << (4.5 - 1.2 * d) << "\n";
    }
  }
  const std::string manifest_path = dir.file("manifest.csv");
  std::ofstream(manifest_path) << manifest.str();

  const std::string weights = dir.file("qa.weights");
  CliResult r = run_cli(
      dir, "qa-train --manifest " + manifest_path + " --out " + weights +
               " --seed 3 --epochs 1 --batch-size 2 --patch 24 "
               "--channels 8,16 --path-blocks 1 --fc-hidden 8");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "test_mse"));
  CHECK(std::filesystem::exists(weights));
  CHECK(contains(read_file(weights + ".report.json"), "baseline_test_mse"));

  // Unseeded runs draw and print a seed.
  CliResult drawn = run_cli(
      dir, "qa-train --manifest " + manifest_path + " --out " + weights +
               " --epochs 1 --batch-size 2 --patch 24 "
               "--channels 8,16 --path-blocks 1 --fc-hidden 8");
  CHECK(drawn.code == 0);
  CHECK(contains(drawn.out, "(drawn"));

  std::ofstream(manifest_path, std::ios::app)
      << "imgs/ref0.png,imgs/dist0_0.png,eleven\n"
      << "imgs/ref0.png\n";
  CliResult bad = run_cli(dir, "qa-train --manifest " + manifest_path +
                                   " --out " + weights + " --seed 3");
  CHECK(bad.code == 2);
  CHECK(contains(bad.out, "row(s): 8, 9"));
}

TEST_CASE("compare-degradation contrasts true and bicubic LR patches") {
  TempDir dir("cli_cmp");
  nn::Tensor<float> hr = synth_image(64, 64, 21);
  save_image_png(dir.file("hr.png"), hr);
  nn::Tensor<float> hr_loaded = load_image(dir.file("hr.png"));

  SUBCASE("bicubic LR measures as identical") {
    save_image_png(dir.file("lr.png"), bicubic_resize(hr_loaded, 0.25));
    CliResult r = run_cli(dir, "compare-degradation --hr " + dir.file("hr.png") +
                                   " --lr " + dir.file("lr.png") + " --out " +
                                   dir.file("plot.png") + " --patch 0,0,16,16");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "psnr=inf"));
    CHECK(contains(r.out, "ssim=1"));
    nn::Tensor<float> plot = load_image(dir.file("plot.png"));
    CHECK(plot.shape == std::vector<int>{1, 3, 16, 36});
  }

  SUBCASE("a different degradation measures as different") {
    nn::Tensor<float> lr({1, 3, 16, 16});
    nn::Rng noise(7);
    for (int c = 0; c < 3; ++c)
      for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x)
          lr.at4(0, c, y, x) =
              std::min(1.0f, std::max(0.0f, hr.at4(0, c, 4 * y, 4 * x) +
                                                float(0.05 * noise.normal())));
    save_image_png(dir.file("lr.png"), lr);
    CliResult r = run_cli(dir, "compare-degradation --hr " + dir.file("hr.png") +
                                   " --lr " + dir.file("lr.png") + " --out " +
                                   dir.file("plot.png") + " --patch 2,2,12,12");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "psnr="));
    CHECK_FALSE(contains(r.out, "psnr=inf"));
  }

  SUBCASE("bad patch specs are usage errors") {
    save_image_png(dir.file("lr.png"), bicubic_resize(hr_loaded, 0.25));
    std::string base = "compare-degradation --hr " + dir.file("hr.png") +
                       " --lr " + dir.file("lr.png") + " --out " +
                       dir.file("plot.png");
    CliResult oob = run_cli(dir, base + " --patch 10,10,20,20");
    CHECK(oob.code == 2);
    CHECK(contains(oob.out, "outside"));
    CHECK(run_cli(dir, base + " --patch 1,2,3").code == 2);
    CHECK(run_cli(dir, base + " --patch a,b,c,d").code == 2);
  }
}

}  // namespace
}  // namespace srtgan
