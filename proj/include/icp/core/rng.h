// Copyright 2026 The ICP Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ICP_CORE_RNG_H_
#define ICP_CORE_RNG_H_

#include <cstdint>
#include <vector>

namespace icp {

// SplitMix64 finalizer.
uint64_t Mix64(uint64_t x);

// Derives an independent stream seed from a parent seed and a tag.
uint64_t DeriveSeed(uint64_t seed, uint64_t tag);

// Counter-based generator: draw n is a pure function of (seed, n), so the
// stream is reproducible regardless of how calls interleave elsewhere.
// Bounded draws are implemented here rather than through <random>
// distributions, whose outputs differ between standard libraries.
class CounterRng {
 public:
  CounterRng() = default;
  explicit CounterRng(uint64_t seed) : seed_(seed) {}

  uint64_t Next();
  // Uniform on [0, n); n must be positive.
  uint64_t UniformInt(uint64_t n);
  // Uniform on [0, 1) with 53 bits of precision.
  double Uniform01();

  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(UniformInt(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  uint64_t seed() const { return seed_; }
  uint64_t counter() const { return counter_; }

  friend bool operator==(const CounterRng&, const CounterRng&) = default;

 private:
  uint64_t seed_ = 0;
  uint64_t counter_ = 0;
};

}  // namespace icp

#endif  // ICP_CORE_RNG_H_
