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

#include "dcube/measurement.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dcube {

BasisPartition::BasisPartition(size_t levels, std::vector<std::vector<size_t>> blocks)
    : levels_(levels), blocks_(std::move(blocks)) {
    std::vector<int> seen(levels, 0);
    for (const auto &block : blocks_) {
        if (block.empty()) {
            throw std::invalid_argument("partition block is empty");
        }
        for (size_t k : block) {
            if (k >= levels) {
                throw std::invalid_argument("partition index " + std::to_string(k + 1) + " exceeds " +
                                            std::to_string(levels) + " levels");
            }
            if (seen[k]++) {
                throw std::invalid_argument("partition index " + std::to_string(k + 1) + " appears twice");
            }
        }
    }
    for (size_t k = 0; k < levels; k++) {
        if (!seen[k]) {
            throw std::invalid_argument("partition does not cover index " + std::to_string(k + 1));
        }
    }
}

BasisPartition BasisPartition::singletons(size_t levels) {
    std::vector<std::vector<size_t>> blocks;
    for (size_t k = 0; k < levels; k++) {
        blocks.push_back({k});
    }
    return BasisPartition(levels, std::move(blocks));
}

BasisPartition BasisPartition::parse(std::string_view text, size_t levels) {
    std::vector<std::vector<size_t>> blocks(1);
    std::string number;
    auto flush = [&]() {
        if (number.empty()) {
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        }
        size_t v = std::stoul(number);
        if (v == 0) {
            throw std::invalid_argument("partition indices are 1-based");
        }
        blocks.back().push_back(v - 1);
        number.clear();
    };
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            number += c;
        } else if (c == ',') {
            flush();
        } else if (c == '|') {
            flush();
            blocks.emplace_back();
        } else if (c != ' ') {
            throw std::invalid_argument("unexpected character in partition '" + std::string(text) + "'");
        }
    }
    flush();
    return BasisPartition(levels, std::move(blocks));
}

std::string BasisPartition::to_string() const {
    std::ostringstream out;
    for (size_t b = 0; b < blocks_.size(); b++) {
        if (b) {
            out << '|';
        }
        for (size_t n = 0; n < blocks_[b].size(); n++) {
            if (n) {
                out << ',';
            }
            out << blocks_[b][n] + 1;
        }
    }
    return out.str();
}

std::vector<double> outcome_probabilities(const HermitianCube &rho, const BasisPartition &part) {
    if (rho.levels() != part.levels()) {
        throw std::invalid_argument("partition levels do not match the cube");
    }
    std::string why = rho.state_violation();
    if (!why.empty()) {
        throw std::invalid_argument("cannot measure: " + why);
    }
    std::vector<double> probs;
    for (const auto &block : part.blocks()) {
        double p = 0;
        for (size_t k : block) {
            p += std::max(0.0, rho.diag(k));
        }
        probs.push_back(p);
    }
    return probs;
}

LudersResult luders_update(const HermitianCube &rho, std::span<const size_t> block) {
    if (block.empty()) {
        throw std::invalid_argument("Lüders block is empty");
    }
    size_t n = rho.levels();
    std::vector<bool> inside(n, false);
    for (size_t k : block) {
        if (k >= n) {
            throw std::invalid_argument("Lüders block index out of range");
        }
        inside[k] = true;
    }
    LudersResult result;
    for (size_t k = 0; k < n; k++) {
        if (inside[k]) {
            result.probability += std::max(0.0, rho.diag(k));
        }
    }
    if (result.probability <= kStateTol) {
        return result;
    }
    double scale = 1.0 / result.probability;
    HermitianCube post(n);
    for (size_t i = 0; i < n; i++) {
        if (!inside[i]) {
            continue;
        }
        post.set_diag(i, scale * rho.diag(i));
        for (size_t j = i + 1; j < n; j++) {
            if (!inside[j]) {
                continue;
            }
            post.set_pair_re(i, j, scale * rho.pair_re(i, j));
            post.set_pair_im(i, j, scale * rho.pair_im(i, j));
            for (size_t k = j + 1; k < n; k++) {
                if (inside[k]) {
                    post.set_triple(i, j, k, scale * rho.triple(i, j, k));
                }
            }
        }
    }
    result.post = std::move(post);
    return result;
}

MeasurementOutcome selective_measure(const HermitianCube &rho, const BasisPartition &part, Rng &rng) {
    std::vector<double> probs = outcome_probabilities(rho, part);
    size_t s = rng.categorical(probs);
    LudersResult update = luders_update(rho, part.blocks()[s]);
    return MeasurementOutcome{s, update.probability, std::move(update.post)};
}

MeasurementOutcome selective_measure(const HermitianCube &rho, const BasisPartition &part, uint64_t seed) {
    Rng rng(seed);
    return selective_measure(rho, part, rng);
}

}  // namespace dcube
