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

#ifndef DCUBE_CHECK_H
#define DCUBE_CHECK_H

#include <cstdint>
#include <string>
#include <vector>

#include "dcube/dynamics.h"

namespace dcube {

struct InvariantCheck {
    std::string name;
    bool passed = false;
    /// Measured quantity (a defect, or the value compared against an expectation).
    double value = 0;
    double tolerance = 0;
    std::string detail;
};

struct CheckOptions {
    TransformT transform = TransformT::canonical();
    uint64_t seed = 20260101;
    size_t trials = 200;
};

/// Runs every library invariant against the given transform. Never throws;
/// an exception inside a check marks that check failed.
std::vector<InvariantCheck> run_invariant_suite(const CheckOptions &options = {});

bool all_passed(const std::vector<InvariantCheck> &checks);

}  // namespace dcube

#endif
