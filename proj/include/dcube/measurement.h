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

#ifndef DCUBE_MEASUREMENT_H
#define DCUBE_MEASUREMENT_H

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dcube/cube.h"
#include "dcube/rng.h"

namespace dcube {

/// Disjoint, nonempty blocks of 0-based basis indices covering 0..levels-1.
class BasisPartition {
   public:
    /// Throws std::invalid_argument if the blocks are not a partition of 0..levels-1.
    BasisPartition(size_t levels, std::vector<std::vector<size_t>> blocks);

    /// Every index in its own block.
    static BasisPartition singletons(size_t levels);
    /// CLI syntax with 1-based indices, e.g. "1|2,3".
    static BasisPartition parse(std::string_view text, size_t levels);

    size_t levels() const {
        return levels_;
    }
    const std::vector<std::vector<size_t>> &blocks() const {
        return blocks_;
    }
    std::string to_string() const;

   private:
    size_t levels_;
    std::vector<std::vector<size_t>> blocks_;
};

struct LudersResult {
    double probability = 0;
    std::optional<HermitianCube> post;  ///< empty when absorbed (probability <= tol)
    bool absorbed() const {
        return !post.has_value();
    }
};

struct MeasurementOutcome {
    size_t block = 0;
    double probability = 0;
    std::optional<HermitianCube> post;
};

/// p_s = sum of rho_kkk over block s, diagonal elements above -tol clamped to 0.
/// Throws std::invalid_argument if rho is not a normalized state or the
/// partition has a different number of levels.
std::vector<double> outcome_probabilities(const HermitianCube &rho, const BasisPartition &part);

/// Keeps the elements whose three indices all lie in the block, scaled by 1/p,
/// and zeroes the rest. Throws std::invalid_argument on an empty or
/// out-of-range block.
LudersResult luders_update(const HermitianCube &rho, std::span<const size_t> block);

/// Draws a block with probability p_s and applies the Lüders update for it.
MeasurementOutcome selective_measure(const HermitianCube &rho, const BasisPartition &part, Rng &rng);
MeasurementOutcome selective_measure(const HermitianCube &rho, const BasisPartition &part, uint64_t seed);

}  // namespace dcube

#endif
