// Copyright 2026 The dcube Authors
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

#ifndef DCUBE_RNG_H
#define DCUBE_RNG_H

#include <cstdint>
#include <random>
#include <span>

namespace dcube {

/// Seeded generator used by every sampled experiment.
///
/// The engine is std::mt19937_64 (its output sequence is fixed by the C++
/// standard). Uniform and normal variates are derived here rather than through
/// <random> distributions, whose algorithms are implementation-defined, so a
/// given (seed, version) reproduces bit-exactly on any conforming toolchain.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    uint64_t next_u64() {
        return engine_();
    }
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal variate (Box-Muller, no caching).
    double normal();
    /// Uniform angle in [0, 2 pi).
    double phase();
    /// Index drawn from a discrete distribution. Weights need not be normalized;
    /// negative weights are treated as 0.
    size_t categorical(std::span<const double> weights);

    /// Seed for the n-th independent sub-stream (splitmix64 of seed and n).
    static uint64_t derive_seed(uint64_t seed, uint64_t n);

   private:
    std::mt19937_64 engine_;
};

}  // namespace dcube

#endif
