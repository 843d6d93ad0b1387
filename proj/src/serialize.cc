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

#include "dcube/serialize.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dcube {

namespace {

Json complex_to_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument("complex entries must be [re, im] pairs");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception &e) {
        throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
    }
}

size_t index_field(const Json &j, const char *key, size_t levels) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw std::invalid_argument(std::string("cube element is missing integer field '") + key + "'");
    }
    auto v = j[key].get<long long>();
    if (v < 1 || static_cast<size_t>(v) > levels) {
        throw std::invalid_argument(std::string("cube index '") + key + "' out of range 1.." + std::to_string(levels));
    }
    return static_cast<size_t>(v - 1);
}

double number_field(const Json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw std::invalid_argument(std::string("missing numeric field '") + key + "'");
    }
    return j[key].get<double>();
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json cube_to_json(const HermitianCube &cube) {
    size_t n = cube.levels();
    Json j;
    j["levels"] = n;
    j["diag"] = Json::array();
    for (double d : cube.diag_values()) {
        j["diag"].push_back(d);
    }
    j["pairs"] = Json::array();
    j["triples"] = Json::array();
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            j["pairs"].push_back({{"i", a + 1}, {"j", b + 1}, {"re_iij", cube.pair_re(a, b)}, {"im_ijj", cube.pair_im(a, b)}});
            for (size_t c = b + 1; c < n; c++) {
                Complex z = cube.triple(a, b, c);
                j["triples"].push_back({{"i", a + 1}, {"j", b + 1}, {"k", c + 1}, {"re", z.real()}, {"im", z.imag()}});
            }
        }
    }
    return j;
}

HermitianCube cube_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("levels") || !j["levels"].is_number_integer()) {
        throw std::invalid_argument("cube JSON needs an integer 'levels'");
    }
    auto levels = j["levels"].get<long long>();
    if (levels < 2) {
        throw std::invalid_argument("cube JSON 'levels' must be >= 2");
    }
    auto n = static_cast<size_t>(levels);
    HermitianCube cube(n);
    if (!j.contains("diag") || !j["diag"].is_array() || j["diag"].size() != n) {
        throw std::invalid_argument("cube JSON 'diag' must list " + std::to_string(n) + " numbers");
    }
    for (size_t i = 0; i < n; i++) {
        if (!j["diag"][i].is_number()) {
            throw std::invalid_argument("cube JSON 'diag' entries must be numbers");
        }
        cube.set_diag(i, j["diag"][i].get<double>());
    }
    for (const auto &p : j.value("pairs", Json::array())) {
        size_t a = index_field(p, "i", n), b = index_field(p, "j", n);
        if (a >= b) {
            throw std::invalid_argument("cube pair needs i < j");
        }
        cube.set_pair_re(a, b, number_field(p, "re_iij"));
        cube.set_pair_im(a, b, number_field(p, "im_ijj"));
    }
    for (const auto &t : j.value("triples", Json::array())) {
        size_t a = index_field(t, "i", n), b = index_field(t, "j", n), c = index_field(t, "k", n);
        if (!(a < b && b < c)) {
            throw std::invalid_argument("cube triple needs i < j < k");
        }
        cube.set_triple(a, b, c, Complex(number_field(t, "re"), number_field(t, "im")));
    }
    return cube;
}

HermitianCube load_cube_file(const std::string &path) {
    return cube_from_json(read_json_file(path));
}

Json matrix_to_json(const MatrixC &m) {
    Json entries = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            entries.push_back(complex_to_json(m(r, c)));
        }
    }
    return Json{{"dim", m.rows()}, {"entries", std::move(entries)}};
}

MatrixC matrix_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer() || !j.contains("entries")) {
        throw std::invalid_argument("matrix JSON needs 'dim' and 'entries'");
    }
    auto dim = j["dim"].get<long long>();
    if (dim < 1 || !j["entries"].is_array() || j["entries"].size() != static_cast<size_t>(dim * dim)) {
        throw std::invalid_argument("matrix JSON 'entries' must hold dim^2 [re, im] pairs");
    }
    MatrixC m(dim, dim);
    for (Eigen::Index r = 0; r < dim; r++) {
        for (Eigen::Index c = 0; c < dim; c++) {
            m(r, c) = complex_from_json(j["entries"][static_cast<size_t>(r * dim + c)]);
        }
    }
    return m;
}

Json density_matrix_to_json(const DensityMatrix &rho) {
    return matrix_to_json(rho.entries);
}

DensityMatrix density_matrix_from_json(const Json &j) {
    return DensityMatrix(matrix_from_json(j));
}

Json unitary_to_json(const UnitaryMatrix &u) {
    return matrix_to_json(u.entries());
}

UnitaryMatrix unitary_from_json(const Json &j) {
    return UnitaryMatrix(matrix_from_json(j));
}

Json transform_to_json(const TransformT &t) {
    Json rows = Json::array();
    for (int r = 0; r < 5; r++) {
        Json row = Json::array();
        for (int c = 0; c < 5; c++) {
            row.push_back(complex_to_json(t.matrix()(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"rows", std::move(rows)}};
}

TransformT transform_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != 5) {
        throw std::invalid_argument("transform JSON needs 'rows' with 5 rows");
    }
    Matrix5c m;
    for (int r = 0; r < 5; r++) {
        const Json &row = j["rows"][static_cast<size_t>(r)];
        if (!row.is_array() || row.size() != 5) {
            throw std::invalid_argument("transform JSON rows must have 5 entries");
        }
        for (int c = 0; c < 5; c++) {
            m(r, c) = complex_from_json(row[static_cast<size_t>(c)]);
        }
    }
    return TransformT(m);
}

TransformT load_transform_file_unchecked(const std::string &path) {
    return transform_from_json(read_json_file(path));
}

TransformT load_transform_file(const std::string &path) {
    TransformT t = load_transform_file_unchecked(path);
    auto bad = t.violations();
    if (!bad.empty()) {
        throw std::invalid_argument("transform '" + path + "' rejected: " + bad.front());
    }
    return t;
}

Json record_to_json(const ExperimentRecord &record) {
    Json j;
    j["schema"] = ExperimentRecord::kSchema;
    j["name"] = record.name;
    j["theory"] = std::string(to_string(record.theory));
    j["inputs"] = record.inputs;
    j["configs"] = record.configs;
    j["table"] = record.table;
    Json derived = Json::object();
    for (const auto &[key, value] : record.derived) {
        derived[key] = value;
    }
    j["derived"] = std::move(derived);
    j["metadata"] = record.metadata;
    j["manifest"] = {{"command", record.manifest.command},
                     {"parameters", record.manifest.parameters},
                     {"seed", record.manifest.seed},
                     {"tool_version", record.manifest.tool_version},
                     {"timestamp", record.manifest.timestamp}};
    return j;
}

ExperimentRecord record_from_json(const Json &j) {
    if (!j.is_object() || j.value("schema", "") != ExperimentRecord::kSchema) {
        throw std::invalid_argument(std::string("expected an experiment record with schema ") +
                                    ExperimentRecord::kSchema);
    }
    ExperimentRecord r;
    r.name = j.at("name").get<std::string>();
    r.theory = parse_theory(j.at("theory").get<std::string>());
    r.inputs = j.at("inputs");
    r.configs = j.at("configs").get<std::vector<std::string>>();
    r.table = j.at("table").get<std::vector<std::vector<double>>>();
    for (const auto &[key, value] : j.at("derived").items()) {
        r.derived[key] = value.get<double>();
    }
    r.metadata = j.at("metadata");
    const Json &m = j.at("manifest");
    r.manifest.command = m.at("command").get<std::string>();
    r.manifest.parameters = m.at("parameters");
    r.manifest.seed = m.at("seed").get<uint64_t>();
    r.manifest.tool_version = m.at("tool_version").get<std::string>();
    r.manifest.timestamp = m.at("timestamp").get<std::string>();
    return r;
}

std::string record_table_csv(const ExperimentRecord &record) {
    std::ostringstream out;
    out << "config,detector,probability\n";
    for (size_t d = 0; d < record.table.size(); d++) {
        for (size_t c = 0; c < record.table[d].size(); c++) {
            std::string config = c < record.configs.size() ? record.configs[c] : std::to_string(c);
            out << config << ',' << d + 1 << ',' << format_double(record.table[d][c]) << '\n';
        }
    }
    return out.str();
}

}  // namespace dcube
