// Copyright 2026 The entglkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef ENTGLKIT_RNG_HPP
#define ENTGLKIT_RNG_HPP

#include <cstdint>
#include <random>

#include "entglkit/common.hpp"

namespace entglkit {

// SplitMix64 finalizer. Used to derive independent per-state and per-test
// streams from a master seed, so results do not depend on scheduling.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// mix(seed, i) = splitmix64(splitmix64(seed) ^ (i * golden))
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ (index * 0x9E3779B97F4A7C15ULL));
}

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return uniform_(engine_); }
    double normal() { return normal_(engine_); }
    cplx complex_normal() {
        double re = normal_(engine_);
        double im = normal_(engine_);
        return {re, im};
    }
    std::mt19937_64 &engine() { return engine_; }

   private:
    std::mt19937_64 engine_;
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
    std::normal_distribution<double> normal_{0.0, 1.0};
};

// Seed drawn from the OS entropy source, for commands run without --seed.
std::uint64_t fresh_seed();

}  // namespace entglkit

#endif
