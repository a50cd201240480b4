// src/rng.h

// Copyright 2026  TseNet-CPP Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef TSENET_RNG_H_
#define TSENET_RNG_H_

#include <cmath>
#include <cstdint>

namespace tsenet {

// SplitMix64 generator. Counter-based streams derived from (seed, stream)
// give every corpus record / parameter block its own reproducible sequence,
// independent of evaluation order. std::mt19937 is avoided on purpose: the
// standard leaves distribution algorithms unspecified, and outputs here must
// be bit-identical across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {
    // Warm up so low-entropy seeds (0, 1, 2, ...) decorrelate.
    NextU64();
    NextU64();
  }

  Rng(uint64_t seed, uint64_t stream)
      : Rng(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1))) {}

  uint64_t NextU64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double Uniform() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform in [0, n). Modulo bias is below 2^-50 for every n used here.
  int64_t UniformInt(int64_t n) {
    return static_cast<int64_t>(NextU64() % static_cast<uint64_t>(n));
  }

  // Standard normal via Box-Muller; consumes two uniforms per pair.
  double Gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = (static_cast<double>(NextU64() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = Uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace tsenet

#endif  // TSENET_RNG_H_
