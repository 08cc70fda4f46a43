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

#ifndef SRTGAN_NN_RNG_H_
#define SRTGAN_NN_RNG_H_

#include <cstdint>
#include <random>
#include <string>

namespace srtgan {
namespace nn {

// mt19937_64 with explicit sampling arithmetic rather than the standard
// distributions, whose algorithms are implementation-defined. Keeps seeds
// reproducible across toolchains and lets the state round-trip through
// checkpoints as text.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : gen_(seed) {}

  uint64_t raw() { return gen_(); }

  // Uniform in [0,1) with 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * (1.0 / 9007199254740992.0); }

  // Uniform integer in [0, n).
  int64_t uniform_int(int64_t n);

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller, one value per call.
  double normal();

  std::string serialize() const;
  void deserialize(const std::string& text);

  // Stable per-(seed, stream) derivation for schedules such as per-epoch
  // shuffles that must be reconstructible when resuming.
  static uint64_t derive(uint64_t seed, uint64_t stream);

 private:
  std::mt19937_64 gen_;
};

}  // namespace nn
}  // namespace srtgan

#endif  // SRTGAN_NN_RNG_H_
