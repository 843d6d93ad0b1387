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

#ifndef DCUBE_SERIALIZE_H
#define DCUBE_SERIALIZE_H

#include <map>
#include <string>
#include <vector>

#include "dcube/cube.h"
#include "dcube/dynamics.h"
#include "dcube/experiments.h"
#include "dcube/quantum.h"
#include "json.hpp"

namespace dcube {

using Json = nlohmann::ordered_json;

/// {levels, diag[], pairs[{i,j,re_iij,im_ijj}], triples[{i,j,k,re,im}]}, 1-based indices.
Json cube_to_json(const HermitianCube &cube);
/// Throws std::invalid_argument on a malformed document.
HermitianCube cube_from_json(const Json &j);
HermitianCube load_cube_file(const std::string &path);

/// {dim, entries: [[re,im], ...]} row-major.
Json matrix_to_json(const MatrixC &m);
MatrixC matrix_from_json(const Json &j);
Json density_matrix_to_json(const DensityMatrix &rho);
DensityMatrix density_matrix_from_json(const Json &j);
Json unitary_to_json(const UnitaryMatrix &u);
UnitaryMatrix unitary_from_json(const Json &j);

/// {rows: [[[re,im], ...], ...]} for a 5x5 transform.
Json transform_to_json(const TransformT &t);
/// Parses without validating the invariants.
TransformT transform_from_json(const Json &j);
/// Parses and rejects (std::invalid_argument) a transform that violates any invariant.
TransformT load_transform_file(const std::string &path);
TransformT load_transform_file_unchecked(const std::string &path);

/// %.17g formatting, used for CSV cells and diagnostics.
std::string format_double(double v);

struct RunManifest {
    std::string command;
    Json parameters = Json::object();
    uint64_t seed = 0;
    std::string tool_version;
    std::string timestamp;
};

/// One named run: its inputs, the probability table and derived quantities.
struct ExperimentRecord {
    static constexpr const char *kSchema = "dcube.experiment/1";

    std::string name;
    TheoryKind theory = TheoryKind::Cube;
    Json inputs = Json::object();
    /// Slit configurations (text form) in table order, possibly empty.
    std::vector<std::string> configs;
    /// table[detector][config]
    std::vector<std::vector<double>> table;
    std::map<std::string, double> derived;
    Json metadata = Json::object();
    RunManifest manifest;
};

Json record_to_json(const ExperimentRecord &record);
ExperimentRecord record_from_json(const Json &j);
/// "config,detector,probability" rows, detectors 1-based.
std::string record_table_csv(const ExperimentRecord &record);

}  // namespace dcube

#endif
