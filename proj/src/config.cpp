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

#include "srtgan/config.h"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "srtgan/error.h"

namespace srtgan {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

template <typename Int>
Int parse_integer(const std::string& key, const std::string& value) {
  Int out{};
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end)
    fail_config("config key '", key, "': '", value, "' is not an integer");
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const double out = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return out;
  } catch (const std::exception&) {
    fail_config("config key '", key, "': '", value, "' is not a number");
  }
}

std::vector<int> parse_int_list(const std::string& key,
                                const std::string& value) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= value.size()) {
    size_t comma = value.find(',', pos);
    if (comma == std::string::npos) comma = value.size();
    out.push_back(parse_integer<int>(key, trim(value.substr(pos, comma - pos))));
    pos = comma + 1;
  }
  if (out.empty())
    fail_config("config key '", key, "': expected a comma-separated list");
  return out;
}

std::string int_list_text(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

using Setter = std::function<void(TrainConfig&, const std::string&,
                                  const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"model.base_channels",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.gen.base_channels = parse_integer<int>(k, v);
       }},
      {"model.n_rir",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.gen.n_rir = parse_integer<int>(k, v);
       }},
      {"model.resblocks_per_rir",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.gen.resblocks_per_rir = parse_integer<int>(k, v);
       }},
      {"model.convs_per_resblock",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.gen.convs_per_resblock = parse_integer<int>(k, v);
       }},
      {"model.ca_reduction",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.gen.ca_reduction = parse_integer<int>(k, v);
       }},
      {"model.disc_base_channels",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.disc.base_channels = parse_integer<int>(k, v);
       }},
      {"critics.qa_channels",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.qa.block_channels = parse_int_list(k, v);
       }},
      {"critics.qa_path_blocks",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.qa.path_blocks = parse_integer<int>(k, v);
       }},
      {"critics.qa_fc_hidden",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.qa.fc_hidden = parse_integer<int>(k, v);
       }},
      {"critics.vgg_channels",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.vgg.stage_channels = parse_int_list(k, v);
       }},
      {"critics.vgg_convs",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.vgg.stage_convs = parse_int_list(k, v);
       }},
      {"loss.content",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.weights.content = parse_real(k, v);
       }},
      {"loss.qa",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.weights.qa = parse_real(k, v);
       }},
      {"loss.gan",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.weights.gan = parse_real(k, v);
       }},
      {"loss.perceptual",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.weights.perceptual = parse_real(k, v);
       }},
      {"loss.gan_mode",
       [](TrainConfig& c, const std::string&, const std::string& v) {
         c.gan_mode = v;
       }},
      {"optimizer.lr_g",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.lr_g = parse_real(k, v);
       }},
      {"optimizer.lr_d",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.lr_d = parse_real(k, v);
       }},
      {"optimizer.beta1",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.beta1 = parse_real(k, v);
       }},
      {"optimizer.beta2",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.beta2 = parse_real(k, v);
       }},
      {"train.batch_size",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.batch_size = parse_integer<int>(k, v);
       }},
      {"train.crop_lr",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.crop_lr = parse_integer<int>(k, v);
       }},
      {"train.total_steps",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.total_steps = parse_integer<std::int64_t>(k, v);
       }},
      {"train.d_steps_per_g",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.d_steps_per_g = parse_integer<int>(k, v);
       }},
      {"train.seed",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.seed = parse_integer<std::uint64_t>(k, v);
         c.seed_given = true;
       }},
      {"train.checkpoint_every",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.checkpoint_every = parse_integer<std::int64_t>(k, v);
       }},
      {"train.validate_every",
       [](TrainConfig& c, const std::string& k, const std::string& v) {
         c.validate_every = parse_integer<std::int64_t>(k, v);
       }},
      {"artifacts.qa_weights",
       [](TrainConfig& c, const std::string&, const std::string& v) {
         c.qa_weights = v;
       }},
      {"artifacts.vgg_weights",
       [](TrainConfig& c, const std::string&, const std::string& v) {
         c.vgg_weights = v;
       }},
  };
  return table;
}

void apply_key(TrainConfig& cfg, const std::string& key,
               const std::string& value) {
  auto it = setters().find(key);
  if (it == setters().end()) fail_config("unknown config key '", key, "'");
  it->second(cfg, key, value);
}

void validate(const TrainConfig& cfg) {
  auto require = [](bool ok, const char* what) {
    if (!ok) fail_config("config: ", what);
  };
  require(cfg.batch_size >= 1, "train.batch_size must be >= 1");
  require(cfg.crop_lr >= 1, "train.crop_lr must be >= 1");
  require(cfg.total_steps >= 1, "train.total_steps must be >= 1");
  require(cfg.d_steps_per_g >= 1, "train.d_steps_per_g must be >= 1");
  require(cfg.checkpoint_every >= 1, "train.checkpoint_every must be >= 1");
  require(cfg.validate_every >= 0, "train.validate_every must be >= 0");
  require(cfg.lr_g > 0 && cfg.lr_d > 0, "optimizer learning rates must be > 0");
  require(cfg.beta1 >= 0 && cfg.beta1 < 1 && cfg.beta2 >= 0 && cfg.beta2 < 1,
          "optimizer betas must lie in [0,1)");
  require(cfg.gan_mode == "triplet" || cfg.gan_mode == "vanilla",
          "loss.gan_mode must be 'triplet' or 'vanilla'");
  for (int ch : cfg.qa.block_channels)
    require(ch >= 1, "critics.qa_channels entries must be >= 1");
  require(cfg.qa.path_blocks >= 1 &&
              cfg.qa.path_blocks <= int(cfg.qa.block_channels.size()),
          "critics.qa_path_blocks must lie in [1, #qa_channels]");
  require(cfg.qa.fc_hidden >= 1, "critics.qa_fc_hidden must be >= 1");
  require(cfg.vgg.stage_channels.size() == cfg.vgg.stage_convs.size(),
          "critics.vgg_channels and critics.vgg_convs must be equally long");
  for (int ch : cfg.vgg.stage_channels)
    require(ch >= 1, "critics.vgg_channels entries must be >= 1");
  for (int n : cfg.vgg.stage_convs)
    require(n >= 1, "critics.vgg_convs entries must be >= 1");
  require(cfg.weights.content >= 0 && cfg.weights.qa >= 0 &&
              cfg.weights.gan >= 0 && cfg.weights.perceptual >= 0,
          "loss weights must be non-negative");
  require(cfg.weights.content + cfg.weights.qa + cfg.weights.gan +
                  cfg.weights.perceptual >
              0,
          "at least one loss weight must be positive");
}

std::string real_text(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

TrainConfig parse_train_config(const std::string& text,
                               const std::vector<std::string>& overrides) {
  TrainConfig cfg;
  std::istringstream in(text);
  std::string line, section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const size_t comment = line.find_first_of("#;");
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        fail_config("config line ", line_no, ": malformed section '", line, "'");
      section = trim(line.substr(1, line.size() - 2));
      const std::string probe = section + ".";
      auto it = setters().lower_bound(probe);
      if (it == setters().end() || it->first.compare(0, probe.size(), probe) != 0)
        fail_config("unknown config section '", section, "'");
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      fail_config("config line ", line_no, ": expected key = value, got '",
                  line, "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail_config("config line ", line_no, ": empty key");
    if (section.empty())
      fail_config("config line ", line_no, ": key '", key,
                  "' appears before any [section]");
    apply_key(cfg, section + "." + key, value);
  }
  for (const std::string& ov : overrides) {
    const size_t eq = ov.find('=');
    if (eq == std::string::npos)
      fail_config("override '", ov, "': expected section.key=value");
    apply_key(cfg, trim(ov.substr(0, eq)), trim(ov.substr(eq + 1)));
  }
  validate(cfg);
  return cfg;
}

TrainConfig load_train_config(const std::string& path,
                              const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) fail_config("config file '", path, "' is not readable");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_train_config(buf.str(), overrides);
}

std::string canonical_config_text(const TrainConfig& cfg) {
  std::ostringstream os;
  os << "[artifacts]\n"
     << "qa_weights = " << cfg.qa_weights << "\n"
     << "vgg_weights = " << cfg.vgg_weights << "\n"
     << "[critics]\n"
     << "qa_channels = " << int_list_text(cfg.qa.block_channels) << "\n"
     << "qa_fc_hidden = " << cfg.qa.fc_hidden << "\n"
     << "qa_path_blocks = " << cfg.qa.path_blocks << "\n"
     << "vgg_channels = " << int_list_text(cfg.vgg.stage_channels) << "\n"
     << "vgg_convs = " << int_list_text(cfg.vgg.stage_convs) << "\n"
     << "[loss]\n"
     << "content = " << real_text(cfg.weights.content) << "\n"
     << "gan = " << real_text(cfg.weights.gan) << "\n"
     << "gan_mode = " << cfg.gan_mode << "\n"
     << "perceptual = " << real_text(cfg.weights.perceptual) << "\n"
     << "qa = " << real_text(cfg.weights.qa) << "\n"
     << "[model]\n"
     << "base_channels = " << cfg.gen.base_channels << "\n"
     << "ca_reduction = " << cfg.gen.ca_reduction << "\n"
     << "convs_per_resblock = " << cfg.gen.convs_per_resblock << "\n"
     << "disc_base_channels = " << cfg.disc.base_channels << "\n"
     << "n_rir = " << cfg.gen.n_rir << "\n"
     << "resblocks_per_rir = " << cfg.gen.resblocks_per_rir << "\n"
     << "[optimizer]\n"
     << "beta1 = " << real_text(cfg.beta1) << "\n"
     << "beta2 = " << real_text(cfg.beta2) << "\n"
     << "lr_d = " << real_text(cfg.lr_d) << "\n"
     << "lr_g = " << real_text(cfg.lr_g) << "\n"
     << "[train]\n"
     << "batch_size = " << cfg.batch_size << "\n"
     << "checkpoint_every = " << cfg.checkpoint_every << "\n"
     << "crop_lr = " << cfg.crop_lr << "\n"
     << "d_steps_per_g = " << cfg.d_steps_per_g << "\n"
     << "seed = " << cfg.seed << "\n"
     << "total_steps = " << cfg.total_steps << "\n"
     << "validate_every = " << cfg.validate_every << "\n";
  return os.str();
}

std::uint64_t config_hash(const TrainConfig& cfg) {
  const std::string text = canonical_config_text(cfg);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace srtgan
