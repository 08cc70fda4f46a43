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

#include <cmath>
#include <fstream>
#include <functional>

#include "doctest.h"
#include "srtgan/array_file.h"
#include "test_data.h"
#include "test_util.h"

using namespace srtgan;

namespace {

TrainConfig tiny_train_config() {
  TrainConfig cfg;
  cfg.gen = testutil::tiny_gen_config();
  cfg.disc = testutil::tiny_disc_config();
  cfg.qa.block_channels = {8, 16};
  cfg.qa.path_blocks = 1;
  cfg.qa.fc_hidden = 8;
  cfg.vgg.stage_channels = {8, 16};
  cfg.vgg.stage_convs = {1, 1};
  cfg.batch_size = 2;
  cfg.crop_lr = 18;  // HR crop 72, above the discriminator's 70 minimum
  cfg.total_steps = 4;
  cfg.checkpoint_every = 100;
  cfg.seed = 7;
  return cfg;
}

std::string config_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const ConfigError& e) {
    return e.what();
  } catch (const Error& e) {
    return std::string("wrong exception type: ") + e.what();
  }
  return "no exception";
}

std::string any_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "no exception";
}

bool same_record(const StepRecord& a, const StepRecord& b) {
  return a.step == b.step && a.content == b.content && a.qa == b.qa &&
         a.gan_g == b.gan_g && a.perceptual == b.perceptual &&
         a.fused_g == b.fused_g && a.gan_d == b.gan_d && a.fused_d == b.fused_d;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("config: parsing, comments, and overrides") {
  SUBCASE("empty text yields defaults") {
    const TrainConfig cfg = parse_train_config("");
    CHECK(cfg.batch_size == 4);
    CHECK(cfg.crop_lr == 48);
    CHECK(cfg.total_steps == 100000);
    CHECK(cfg.lr_g == doctest::Approx(1e-4));
    CHECK(cfg.gan_mode == "triplet");
    CHECK(cfg.weights.content == doctest::Approx(5.0));
    CHECK(cfg.weights.qa == doctest::Approx(2e-7));
    CHECK(cfg.gen.base_channels == 32);
    CHECK(cfg.vgg.stage_channels == std::vector<int>{64, 128, 256, 512});
  }
  SUBCASE("sections, comments, and whitespace") {
    const std::string text =
        "# run settings\n"
        "[train]\n"
        "batch_size = 2   ; inline comment\n"
        "  seed=42\n"
        "\n"
        "[optimizer]\n"
        "lr_g = 2e-3\n"
        "[critics]\n"
        "vgg_channels = 8, 16\n"
        "vgg_convs = 1,1\n";
    const TrainConfig cfg = parse_train_config(text);
    CHECK(cfg.batch_size == 2);
    CHECK(cfg.seed == 42);
    CHECK(cfg.lr_g == doctest::Approx(2e-3));
    CHECK(cfg.vgg.stage_channels == std::vector<int>{8, 16});
    CHECK(cfg.vgg.stage_convs == std::vector<int>{1, 1});
  }
  SUBCASE("overrides win over the file") {
    const TrainConfig cfg = parse_train_config(
        "[optimizer]\nlr_g = 1e-3\n", {"optimizer.lr_g=5e-5", "train.seed=9"});
    CHECK(cfg.lr_g == doctest::Approx(5e-5));
    CHECK(cfg.seed == 9);
  }
  SUBCASE("unknown keys and sections are named") {
    CHECK(config_error([] {
            parse_train_config("[train]\nbogus = 1\n");
          }).find("train.bogus") != std::string::npos);
    CHECK(config_error([] {
            parse_train_config("[cooking]\nheat = 7\n");
          }).find("cooking") != std::string::npos);
    CHECK(config_error([] {
            parse_train_config("", {"train.nope=1"});
          }).find("train.nope") != std::string::npos);
  }
  SUBCASE("malformed input is named") {
    CHECK(config_error([] {
            parse_train_config("[train]\nbatch_size = soup\n");
          }).find("train.batch_size") != std::string::npos);
    CHECK(config_error([] {
            parse_train_config("batch_size = 2\n");
          }).find("before any [section]") != std::string::npos);
    CHECK(config_error([] {
            parse_train_config("[train]\nno equals sign here\n");
          }).find("key = value") != std::string::npos);
    CHECK(config_error([] {
            parse_train_config("", {"justakey"});
          }).find("justakey") != std::string::npos);
  }
  SUBCASE("invariants are enforced") {
    CHECK(config_error([] {
            parse_train_config("[train]\ntotal_steps = 0\n");
          }).find("total_steps") != std::string::npos);
    CHECK(config_error([] {
            parse_train_config("[train]\nbatch_size = 0\n");
          }).find("batch_size") != std::string::npos);
    CHECK(config_error([] {
            parse_train_config("[loss]\ngan_mode = both\n");
          }).find("gan_mode") != std::string::npos);
    CHECK(config_error([] {
            parse_train_config("[optimizer]\nbeta1 = 1.0\n");
          }).find("betas") != std::string::npos);
    CHECK(config_error([] {
            parse_train_config(
                "[loss]\ncontent = 0\nqa = 0\ngan = 0\nperceptual = 0\n");
          }).find("at least one") != std::string::npos);
    CHECK(config_error([] {
            parse_train_config("[critics]\nvgg_channels = 8,16,32\n"
                               "vgg_convs = 1,1\n");
          }).find("equally long") != std::string::npos);
  }
}

TEST_CASE("config: canonical text and hash") {
  TrainConfig cfg = tiny_train_config();
  const std::string text = canonical_config_text(cfg);
  CHECK(text.find("gan_mode = triplet") != std::string::npos);
  CHECK(text.find("qa_channels = 8,16") != std::string::npos);

  const TrainConfig reparsed = parse_train_config(text);
  CHECK(config_hash(reparsed) == config_hash(cfg));
  CHECK(canonical_config_text(reparsed) == text);

  TrainConfig tweaked = cfg;
  tweaked.total_steps += 1;
  CHECK(config_hash(tweaked) != config_hash(cfg));
  tweaked = cfg;
  tweaked.weights.qa = 3e-7;
  CHECK(config_hash(tweaked) != config_hash(cfg));
  tweaked = cfg;
  tweaked.qa_weights = "somewhere.af";
  CHECK(config_hash(tweaked) != config_hash(cfg));
}

TEST_CASE("trainer: identical seeds give identical traces") {
  testutil::TempDir tmp("trainer_det");
  const std::string data_dir = testutil::write_sr_dataset(tmp.file("data"), 3, 20);
  const PairDataset data = PairDataset::open(data_dir);

  TrainConfig cfg = tiny_train_config();
  cfg.total_steps = 10;

  auto run = [&](const std::string& out) {
    Trainer t(cfg);
    TrainRunOptions opt;
    opt.out_dir = tmp.file(out);
    TrainRunResult res = t.train(data, opt);
    const std::uint64_t h = params_hash(t.generator().params());
    return std::make_pair(std::move(res), h);
  };
  auto [res_a, hash_a] = run("a");
  auto [res_b, hash_b] = run("b");

  REQUIRE(res_a.records.size() == 10);
  REQUIRE(res_b.records.size() == 10);
  for (size_t i = 0; i < 10; ++i)
    CHECK(same_record(res_a.records[i], res_b.records[i]));
  CHECK(hash_a == hash_b);

  // Every record is finite and the step counter advances by one.
  for (size_t i = 0; i < 10; ++i) {
    const StepRecord& r = res_a.records[i];
    CHECK(r.step == std::int64_t(i + 1));
    CHECK(std::isfinite(r.fused_g));
    CHECK(std::isfinite(r.fused_d));
  }

  // The log exists and carries one parseable line per step.
  const std::string log = read_file(tmp.file("a") + "/train.log");
  CHECK(std::count(log.begin(), log.end(), '\n') == 10);
  CHECK(log.find("step=1 content=") != std::string::npos);
  CHECK(log.rfind("fused_d=") != std::string::npos);
}

TEST_CASE("trainer: resume continues the unbroken trajectory") {
  testutil::TempDir tmp("trainer_resume");
  const std::string data_dir = testutil::write_sr_dataset(tmp.file("data"), 3, 20);
  const PairDataset data = PairDataset::open(data_dir);

  TrainConfig cfg = tiny_train_config();
  cfg.total_steps = 6;
  cfg.checkpoint_every = 3;

  Trainer full(cfg);
  TrainRunOptions opt_a;
  opt_a.out_dir = tmp.file("full");
  const TrainRunResult run_a = full.train(data, opt_a);
  REQUIRE(run_a.records.size() == 6);

  const std::string mid_ckpt = tmp.file("full") + "/checkpoint_00000003.ckpt";
  Trainer resumed = Trainer::from_checkpoint(mid_ckpt, &cfg);
  CHECK(resumed.step() == 3);
  TrainRunOptions opt_b;
  opt_b.out_dir = tmp.file("resumed");
  const TrainRunResult run_b = resumed.train(data, opt_b);
  REQUIRE(run_b.records.size() == 3);

  for (size_t i = 0; i < 3; ++i)
    CHECK(same_record(run_b.records[i], run_a.records[i + 3]));
  CHECK(params_hash(resumed.generator().params()) ==
        params_hash(full.generator().params()));
  CHECK(params_hash(resumed.discriminator().params()) ==
        params_hash(full.discriminator().params()));
}

TEST_CASE("trainer: checkpoint round trip is bit-identical") {
  testutil::TempDir tmp("trainer_ckpt");
  const std::string data_dir = testutil::write_sr_dataset(tmp.file("data"), 2, 20);
  const PairDataset data = PairDataset::open(data_dir);

  TrainConfig cfg = tiny_train_config();
  cfg.total_steps = 2;
  Trainer t(cfg);
  TrainRunOptions opt;
  opt.out_dir = tmp.file("run");
  t.train(data, opt);

  const std::string first = tmp.file("ckpt_a");
  t.save_checkpoint(first);
  Trainer loaded = Trainer::from_checkpoint(first);
  const std::string second = tmp.file("ckpt_b");
  loaded.save_checkpoint(second);
  CHECK(read_file(first) == read_file(second));

  CHECK(params_hash(loaded.generator().params()) ==
        params_hash(t.generator().params()));
  CHECK(params_hash(loaded.discriminator().params()) ==
        params_hash(t.discriminator().params()));
  CHECK(loaded.step() == 2);

  const ArrayFile af = ArrayFile::load(first);
  CHECK(af.get_meta("version") == "1");
  CHECK(af.get_meta("step") == "2");
  CHECK(af.f32.count("param.g.llie.weight") == 1);
  CHECK(af.f32.count("adam_g.m.llie.weight") == 1);
  CHECK(af.f32.count("buffer.d.disc.layer1.norm.running_mean") == 1);
}

TEST_CASE("trainer: resume refuses a mismatched config") {
  testutil::TempDir tmp("trainer_refuse");
  TrainConfig cfg = tiny_train_config();
  Trainer t(cfg);
  const std::string path = tmp.file("x.ckpt");
  t.save_checkpoint(path);

  TrainConfig other = cfg;
  other.lr_g = 3e-4;
  const std::string msg = config_error(
      [&] { Trainer::from_checkpoint(path, &other); });
  CHECK(msg.find("config hash") != std::string::npos);

  CHECK_NOTHROW(Trainer::from_checkpoint(path, &cfg));
}

TEST_CASE("trainer: corrupt or alien checkpoint files are rejected") {
  testutil::TempDir tmp("trainer_corrupt");
  {
    std::ofstream junk(tmp.file("junk.ckpt"), std::ios::binary);
    junk << "this is not a checkpoint";
  }
  CHECK(any_error([&] { Trainer::from_checkpoint(tmp.file("junk.ckpt")); }) !=
        "no exception");

  ArrayFile alien;
  alien.meta["format"] = "something-else";
  alien.save(tmp.file("alien.ckpt"));
  CHECK(any_error([&] {
          Trainer::from_checkpoint(tmp.file("alien.ckpt"));
        }).find("not a training checkpoint") != std::string::npos);
}

TEST_CASE("trainer: frozen critics never move while G and D do") {
  testutil::TempDir tmp("trainer_frozen");
  const std::string data_dir = testutil::write_sr_dataset(tmp.file("data"), 2, 20);
  const PairDataset data = PairDataset::open(data_dir);

  TrainConfig cfg = tiny_train_config();
  cfg.total_steps = 3;
  Trainer t(cfg);
  const std::uint64_t qa_before = params_hash(t.qa().params());
  const std::uint64_t vgg_before = params_hash(t.vgg().params());
  const std::uint64_t gen_before = params_hash(t.generator().params());
  const std::uint64_t disc_before = params_hash(t.discriminator().params());

  TrainRunOptions opt;
  opt.out_dir = tmp.file("run");
  t.train(data, opt);

  CHECK(params_hash(t.qa().params()) == qa_before);
  CHECK(params_hash(t.vgg().params()) == vgg_before);
  CHECK(params_hash(t.generator().params()) != gen_before);
  CHECK(params_hash(t.discriminator().params()) != disc_before);
}

TEST_CASE("trainer: content-only training reduces the content loss") {
  testutil::TempDir tmp("trainer_overfit");
  const std::string data_dir = testutil::write_sr_dataset(tmp.file("data"), 2, 16);
  const PairDataset data = PairDataset::open(data_dir);

  TrainConfig cfg = tiny_train_config();
  cfg.weights = LossWeights{1.0, 0.0, 0.0, 0.0};
  cfg.crop_lr = 14;  // no discriminator in play, so small crops are fine
  cfg.total_steps = 30;
  cfg.lr_g = 1e-3;

  Trainer t(cfg);
  TrainRunOptions opt;
  opt.out_dir = tmp.file("run");
  const TrainRunResult res = t.train(data, opt);
  REQUIRE(res.records.size() == 30);

  double early = 0.0, late = 0.0;
  for (int i = 0; i < 5; ++i) {
    early += res.records[size_t(i)].content;
    late += res.records[size_t(25 + i)].content;
  }
  CHECK(late < early);

  // Disabled terms are skipped and reported as zero.
  for (const StepRecord& r : res.records) {
    CHECK(r.qa == 0.0);
    CHECK(r.gan_g == 0.0);
    CHECK(r.perceptual == 0.0);
    CHECK(r.gan_d == 0.0);
    CHECK(r.fused_d == 0.0);
  }
}

TEST_CASE("trainer: vanilla mode and a 2:1 D ratio run cleanly") {
  testutil::TempDir tmp("trainer_vanilla");
  const std::string data_dir = testutil::write_sr_dataset(tmp.file("data"), 2, 20);
  const PairDataset data = PairDataset::open(data_dir);

  TrainConfig cfg = tiny_train_config();
  cfg.gan_mode = "vanilla";
  cfg.d_steps_per_g = 2;
  cfg.total_steps = 2;
  Trainer t(cfg);
  TrainRunOptions opt;
  opt.out_dir = tmp.file("run");
  const TrainRunResult res = t.train(data, opt);
  REQUIRE(res.records.size() == 2);
  for (const StepRecord& r : res.records) {
    CHECK(std::isfinite(r.fused_g));
    CHECK(std::isfinite(r.gan_d));
  }
}

TEST_CASE("trainer: inference contract") {
  TrainConfig cfg = tiny_train_config();
  Trainer t(cfg);

  const nn::Tensor<float> lr = testutil::synth_image(12, 12, 5);
  const nn::Tensor<float> a = t.infer(lr);
  CHECK(a.shape == std::vector<int>{1, 3, 48, 48});

  // Purity: repeated calls agree bit for bit; untrained output is in range.
  const nn::Tensor<float> b = t.infer(lr);
  CHECK(nn::tensor_hash(a) == nn::tensor_hash(b));
  for (float v : a.data) {
    CHECK(v >= 0.0f);
    CHECK(v <= 1.0f);
  }

  nn::Tensor<float> bad({1, 1, 12, 12});
  CHECK_THROWS_AS(t.infer(bad), Error);
}

TEST_CASE("trainer: evaluation plumbing") {
  testutil::TempDir tmp("trainer_eval");
  const std::string data_dir = testutil::write_sr_dataset(tmp.file("data"), 3, 16);
  const PairDataset data = PairDataset::open(data_dir);

  TrainConfig cfg = tiny_train_config();
  Trainer t(cfg);

  SUBCASE("identity pair maxes every metric") {
    const nn::Tensor<float> hr = testutil::synth_image(32, 32, 3);
    const LpipsCalibration calib =
        LpipsCalibration::uniform_for(cfg.vgg.stage_channels);
    const ImageMetrics m =
        measure_pair("self", hr, hr, t.vgg(), calib, MetricOptions{});
    CHECK(std::isinf(m.psnr));
    CHECK(m.ssim == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(m.lpips == doctest::Approx(0.0).epsilon(1e-9));
  }
  SUBCASE("report covers the dataset and records conventions") {
    const MetricsReport r = t.evaluate_on(data, MetricOptions{});
    CHECK(r.records.size() == data.size());
    CHECK(r.metadata.at("channel_convention") == "rgb");
    CHECK(r.metadata.at("border") == "0");
    CHECK(std::isfinite(r.mean_psnr));
    CHECK(std::isfinite(r.mean_lpips));

    MetricOptions y_opt;
    y_opt.y_channel = true;
    y_opt.border = 4;
    const MetricsReport ry = t.evaluate_on(data, y_opt);
    CHECK(ry.metadata.at("channel_convention") == "y");
    CHECK(ry.metadata.at("border") == "4");
  }
}

TEST_CASE("trainer: validation cadence emits metric lines") {
  testutil::TempDir tmp("trainer_val");
  const std::string data_dir = testutil::write_sr_dataset(tmp.file("data"), 2, 20);
  const PairDataset data = PairDataset::open(data_dir);
  const std::string val_dir = testutil::write_sr_dataset(tmp.file("val"), 1, 16, 9);
  const PairDataset val = PairDataset::open(val_dir);

  TrainConfig cfg = tiny_train_config();
  cfg.total_steps = 4;
  cfg.validate_every = 2;
  Trainer t(cfg);
  TrainRunOptions opt;
  opt.out_dir = tmp.file("run");
  opt.validation = &val;
  t.train(data, opt);

  const std::string log = read_file(tmp.file("run") + "/train.log");
  CHECK(log.find("step=2 val_psnr=") != std::string::npos);
  CHECK(log.find("step=4 val_psnr=") != std::string::npos);
  CHECK(log.find("val_lpips=") != std::string::npos);
}

TEST_CASE("trainer: empty datasets are rejected at open") {
  testutil::TempDir tmp("trainer_empty");
  std::filesystem::create_directories(tmp.file("data"));
  { std::ofstream index(tmp.file("data") + "/index.txt"); }
  CHECK(any_error([&] { PairDataset::open(tmp.file("data")); })
            .find("empty index") != std::string::npos);
}
