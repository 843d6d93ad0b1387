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

#include "dcube/rng.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dcube {

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::phase() {
    return 2.0 * std::numbers::pi * uniform();
}

size_t Rng::categorical(std::span<const double> weights) {
    if (weights.empty()) {
        throw std::invalid_argument("categorical draw from an empty distribution");
    }
    double total = 0;
    for (double w : weights) {
        total += std::max(w, 0.0);
    }
    if (!(total > 0)) {
        throw std::invalid_argument("categorical draw from a zero distribution");
    }
    double target = uniform() * total;
    double acc = 0;
    size_t last_positive = 0;
    for (size_t n = 0; n < weights.size(); n++) {
        if (weights[n] <= 0) {
            continue;
        }
        acc += weights[n];
        last_positive = n;
        if (target < acc) {
            return n;
        }
    }
    return last_positive;
}

uint64_t Rng::derive_seed(uint64_t seed, uint64_t n) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (n + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace dcube
