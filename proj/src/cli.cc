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

#include "dcube/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <regex>
#include <stdexcept>

#include "CLI11.hpp"
#include "dcube/check.h"
#include "dcube/experiments.h"
#include "dcube/quantum.h"
#include "dcube/serialize.h"
#include "dcube/states.h"

namespace dcube {

namespace {

struct OutputOptions {
    std::string out;
    bool csv = false;
    bool json = false;
    std::string timestamp;
};

struct InterfereOptions {
    std::string theory = "cube";
    size_t k = 3;
    std::string state;
    std::string transform;
    size_t trials = 0;
    uint64_t seed = 1;
};

struct LgOptions {
    std::string theory = "cube";
    size_t trials = 0;
    uint64_t seed = 1;
};

struct TomoOptions {
    std::string state;
    bool exact = false;
    uint64_t shots = 0;
    uint64_t seed = 1;
    std::string transform;
};

struct CheckCliOptions {
    std::string transform;
    uint64_t seed = CheckOptions{}.seed;
    size_t trials = CheckOptions{}.trials;
};

std::string utc_iso8601(std::time_t t) {
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string resolve_timestamp(const std::string &flag) {
    if (!flag.empty()) {
        return flag;
    }
    if (const char *epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        char *end = nullptr;
        long long v = std::strtoll(epoch, &end, 10);
        if (end != epoch && *end == '\0') {
            return utc_iso8601(static_cast<std::time_t>(v));
        }
    }
    return utc_iso8601(std::chrono::system_clock::to_time_t(std::chrono::system_clock::now()));
}

RunManifest make_manifest(const std::string &command, Json parameters, uint64_t seed, const OutputOptions &o) {
    RunManifest m;
    m.command = command;
    m.parameters = std::move(parameters);
    m.seed = seed;
    m.tool_version = kToolVersion;
    m.timestamp = resolve_timestamp(o.timestamp);
    return m;
}

/// Writes to --out, else $DCUBE_OUT_DIR/<command>.<ext>, else the stream.
void emit(const std::string &text, const std::string &command, const char *ext, const OutputOptions &o,
          std::ostream &out) {
    std::string path = o.out;
    if (path.empty()) {
        if (const char *dir = std::getenv(kOutDirEnv); dir != nullptr && *dir != '\0') {
            path = std::string(dir) + "/" + command + "." + ext;
        }
    }
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::invalid_argument("cannot open output file '" + path + "'");
    }
    f << text;
    if (!f) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

void emit_record(const ExperimentRecord &record, const OutputOptions &o, std::ostream &out) {
    if (o.csv) {
        emit(record_table_csv(record), record.name, "csv", o, out);
    } else {
        emit(record_to_json(record).dump(2) + "\n", record.name, "json", o, out);
    }
}

bool ends_with(const std::string &s, const std::string &suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Json read_json_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    try {
        return Json::parse(f);
    } catch (const Json::exception &e) {
        throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
    }
}

/// Index of "e<n>" (0-based) or -1.
long basis_index(const std::string &spec) {
    static const std::regex re("e([0-9]+)");
    std::smatch m;
    if (!std::regex_match(spec, m, re)) {
        return -1;
    }
    return std::stol(m[1]) - 1;
}

HermitianCube cube_state(const std::string &spec, size_t k) {
    if (spec.empty()) {
        return HermitianCube::basis(k, 0);
    }
    std::string full = spec;
    if (basis_index(spec) >= 0 && k != 3) {
        full += "@" + std::to_string(k);
    }
    HermitianCube cube = resolve_state(full).cube;
    if (cube.levels() != k) {
        throw std::invalid_argument("state '" + spec + "' has " + std::to_string(cube.levels()) + " levels, expected " +
                                    std::to_string(k));
    }
    return cube;
}

VectorC basis_vector(const std::string &spec, size_t k) {
    long idx = basis_index(spec);
    if (idx < 0 || static_cast<size_t>(idx) >= k) {
        return {};
    }
    VectorC v = VectorC::Zero(static_cast<Eigen::Index>(k));
    v(idx) = 1;
    return v;
}

DensityMatrix quantum_state(const std::string &spec, size_t k) {
    if (spec.empty()) {
        return DensityMatrix::pure(PureStateVector(basis_vector("e1", k)).amplitudes());
    }
    DensityMatrix rho;
    if (ends_with(spec, ".json")) {
        rho = density_matrix_from_json(read_json_file(spec));
    } else {
        VectorC v = basis_vector(spec, k);
        if (v.size() == 0) {
            v = parse_amplitudes(spec);
        }
        rho = DensityMatrix::pure(PureStateVector(v).amplitudes());
    }
    if (rho.dim() != k) {
        throw std::invalid_argument("state '" + spec + "' has dimension " + std::to_string(rho.dim()) +
                                    ", expected " + std::to_string(k));
    }
    return rho;
}

std::vector<double> classical_state(const std::string &spec, size_t k) {
    std::vector<double> p(k, 0.0);
    if (spec.empty()) {
        p[0] = 1;
        return p;
    }
    long idx = basis_index(spec);
    if (idx >= 0 && static_cast<size_t>(idx) < k) {
        p[static_cast<size_t>(idx)] = 1;
        return p;
    }
    VectorC v = parse_amplitudes(spec);
    if (static_cast<size_t>(v.size()) != k) {
        throw std::invalid_argument("classical state '" + spec + "' needs " + std::to_string(k) + " entries");
    }
    for (size_t i = 0; i < k; i++) {
        Complex c = v(static_cast<Eigen::Index>(i));
        if (c.imag() != 0) {
            throw std::invalid_argument("classical state '" + spec + "' has a complex entry");
        }
        p[i] = c.real();
    }
    return p;
}

TheoryModel build_model(TheoryKind kind, size_t k, const std::string &state, const std::string &transform) {
    TheoryModel model = reference_model(kind, k);
    if (auto *c = std::get_if<CubeModel>(&model)) {
        c->initial = cube_state(state, k);
        if (!transform.empty() && transform != "T") {
            c->transform = load_transform_file(transform);
        }
    } else if (auto *q = std::get_if<QuantumModel>(&model)) {
        q->initial = quantum_state(state, k);
        if (!transform.empty() && transform != "dft") {
            q->unitaries = {unitary_from_json(read_json_file(transform))};
        }
    } else if (auto *cl = std::get_if<ClassicalModel>(&model)) {
        cl->initial = classical_state(state, k);
        if (!transform.empty() && transform != "uniform") {
            cl->steps = {matrix_from_json(read_json_file(transform)).real()};
        }
    }
    std::string violation = model_violation(model);
    if (!violation.empty()) {
        throw std::invalid_argument(violation);
    }
    return model;
}

std::string subset_label(unsigned mask, size_t k) {
    std::string label = "I_";
    for (size_t s = 0; s < k; s++) {
        if ((mask >> s) & 1u) {
            label += std::to_string(s + 1);
        }
    }
    return label;
}

int cmd_interfere(const InterfereOptions &opt, const OutputOptions &o, std::ostream &out) {
    TheoryKind kind = parse_theory(opt.theory);
    TheoryModel model = build_model(kind, opt.k, opt.state, opt.transform);

    ExperimentRecord record;
    record.name = "interfere";
    record.theory = kind;
    record.inputs = {{"state", opt.state.empty() ? "e1" : opt.state},
                     {"transform", opt.transform.empty() ? "default" : opt.transform},
                     {"k", opt.k}};
    const unsigned configs = 1u << opt.k;
    for (unsigned mask = 0; mask < configs; mask++) {
        record.configs.push_back(SlitConfig(opt.k, mask).to_string());
    }
    for (size_t d = 0; d < opt.k; d++) {
        record.table.push_back(interference_table(model, d));
    }
    for (unsigned subset = 0; subset < configs; subset++) {
        if (std::popcount(subset) < 2) {
            continue;
        }
        std::string label = subset_label(subset, opt.k);
        for (size_t d = 0; d < opt.k; d++) {
            record.derived[label + "@d" + std::to_string(d + 1)] = sorkin_subset(record.table[d], opt.k, subset);
        }
        record.derived[label] = record.derived[label + "@d1"];
    }
    if (opt.trials > 0) {
        SweepResult sweep = sorkin_sweep(kind, opt.k, opt.trials, opt.seed);
        record.derived["sweep_max_abs_" + subset_label(configs - 1, opt.k)] = sweep.max_abs_order_k;
        record.derived["sweep_max_abs_I_pair"] = sweep.max_abs_pairwise;
        record.metadata["sweep_trials"] = sweep.trials;
        record.metadata["sweep_note"] = sweep.note;
    }
    record.metadata["detector_for_unsuffixed"] = 1;
    record.manifest = make_manifest("interfere",
                                    {{"theory", opt.theory},
                                     {"k", opt.k},
                                     {"state", opt.state},
                                     {"transform", opt.transform},
                                     {"trials", opt.trials}},
                                    opt.seed, o);
    emit_record(record, o, out);
    return kExitOk;
}

int cmd_lg(const LgOptions &opt, const OutputOptions &o, std::ostream &out) {
    TheoryKind kind = parse_theory(opt.theory);
    LeggettGargResult r = leggett_garg_run(reference_model(kind, 3));

    ExperimentRecord record;
    record.name = "lg";
    record.theory = kind;
    record.inputs = {{"initial", "e1"}, {"observable", "+1 on level 1, -1 otherwise"}};
    record.derived["C12"] = r.c12;
    record.derived["C23"] = r.c23;
    record.derived["C34"] = r.c34;
    record.derived["C14"] = r.c14;
    record.derived["K"] = r.k;
    if (opt.trials > 0) {
        LeggettGargSweep sweep = leggett_garg_sweep(kind, opt.trials, opt.seed);
        record.derived["max_K"] = sweep.max_k;
        record.derived["max_branch_defect"] = sweep.max_branch_defect;
        record.metadata["sweep_trials"] = sweep.trials;
    }
    record.manifest =
        make_manifest("lg", {{"theory", opt.theory}, {"trials", opt.trials}}, opt.seed, o);
    emit_record(record, o, out);
    return kExitOk;
}

int cmd_tomo(const TomoOptions &opt, const OutputOptions &o, std::ostream &out) {
    if (opt.state.empty()) {
        throw std::invalid_argument("--state is required");
    }
    NamedState state = resolve_state(opt.state);
    if (state.cube.levels() != 3) {
        throw std::invalid_argument("tomography needs a three-level state");
    }
    if (std::string v = state.cube.state_violation(kStateTol); !v.empty()) {
        throw std::invalid_argument(v);
    }
    TransformT t = opt.transform.empty() ? TransformT::canonical() : load_transform_file(opt.transform);
    bool exact = opt.exact || opt.shots == 0;

    TomographyResult r;
    if (exact) {
        r = tomography_exact(state.cube, t);
    } else {
        Rng rng(opt.seed);
        r = tomography_sampled(state.cube, opt.shots, rng, t);
    }
    Complex truth = state.cube.triple(0, 1, 2);

    ExperimentRecord record;
    record.name = "tomo";
    record.theory = TheoryKind::Cube;
    record.inputs = {{"state", state.name}, {"cube", cube_to_json(state.cube)}};
    std::array<double, 3> direct = protocol_distribution(state.cube, CountProtocol::Direct, t);
    std::array<double, 3> after = protocol_distribution(state.cube, CountProtocol::AfterT, t);
    record.configs = {"direct", "after_T"};
    for (size_t d = 0; d < 3; d++) {
        record.table.push_back({direct[d], after[d]});
    }
    record.derived["z_true_re"] = truth.real();
    record.derived["z_true_im"] = truth.imag();
    record.derived["z_hat_re"] = r.z.real();
    record.derived["z_hat_im"] = r.z.imag();
    record.derived["abs_error"] = std::abs(r.z - truth);
    record.derived["residual"] = r.residual;
    record.derived["shots"] = exact ? 0.0 : static_cast<double>(opt.shots);
    record.metadata["mode"] = exact ? "exact" : "sampled";
    record.manifest = make_manifest("tomo",
                                    {{"state", opt.state},
                                     {"exact", exact},
                                     {"shots", exact ? 0 : opt.shots},
                                     {"transform", opt.transform}},
                                    opt.seed, o);
    emit_record(record, o, out);
    return kExitOk;
}

int cmd_check(const CheckCliOptions &opt, const OutputOptions &o, std::ostream &out) {
    CheckOptions options;
    options.seed = opt.seed;
    options.trials = opt.trials;
    if (!opt.transform.empty()) {
        options.transform = load_transform_file_unchecked(opt.transform);
    }
    std::vector<InvariantCheck> checks = run_invariant_suite(options);
    bool ok = all_passed(checks);

    if (o.json) {
        Json j = Json::object();
        j["schema"] = "dcube.check/1";
        j["passed"] = ok;
        Json list = Json::array();
        for (const auto &c : checks) {
            list.push_back({{"name", c.name},
                            {"passed", c.passed},
                            {"value", std::isnan(c.value) ? Json(nullptr) : Json(c.value)},
                            {"tolerance", c.tolerance},
                            {"detail", c.detail}});
        }
        j["checks"] = std::move(list);
        RunManifest m = make_manifest("check", {{"transform", opt.transform}, {"trials", opt.trials}}, opt.seed, o);
        j["manifest"] = {{"command", m.command},
                         {"parameters", m.parameters},
                         {"seed", m.seed},
                         {"tool_version", m.tool_version},
                         {"timestamp", m.timestamp}};
        emit(j.dump(2) + "\n", "check", "json", o, out);
    } else {
        std::string text;
        for (const auto &c : checks) {
            text += std::string(c.passed ? "PASS " : "FAIL ") + c.name + " value=" + format_double(c.value) +
                    " tol=" + format_double(c.tolerance);
            if (!c.detail.empty()) {
                text += " (" + c.detail + ")";
            }
            text += "\n";
        }
        text += ok ? "all invariants hold\n" : "invariant failure\n";
        emit(text, "check", "txt", o, out);
    }
    return ok ? kExitOk : kExitInvariantFailure;
}

int cmd_state(const std::string &spec, const OutputOptions &o, std::ostream &out) {
    Json j = Json::object();
    if (spec.empty()) {
        j["registry"] = registry_names();
        j["parametric"] = {"e<k>@<N>", "rho_n(psi=<amplitudes>,n=<1|2|3>)", "<file>.json"};
    } else {
        NamedState state = resolve_state(spec);
        j["name"] = state.name;
        j["cube"] = cube_to_json(state.cube);
        std::string violation = state.cube.state_violation(kStateTol);
        j["normalized_state"] = violation.empty();
        if (!violation.empty()) {
            j["violation"] = violation;
        }
    }
    emit(j.dump(2) + "\n", "state", "json", o, out);
    return kExitOk;
}

void add_output_flags(CLI::App *cmd, OutputOptions &o, bool csv) {
    cmd->add_option("--out", o.out, "Output file (default: $" + std::string(kOutDirEnv) + "/<command>.json or stdout)");
    auto *json = cmd->add_flag("--json", o.json, "JSON output");
    if (csv) {
        cmd->add_flag("--csv", o.csv, "CSV probability table instead of JSON")->excludes(json);
    }
    cmd->add_option("--timestamp", o.timestamp, "Manifest timestamp (default: SOURCE_DATE_EPOCH or now)");
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"dcube: density-cube interference and tomography simulator", "dcube"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    OutputOptions o;
    InterfereOptions interfere;
    LgOptions lg;
    TomoOptions tomo;
    CheckCliOptions check;
    std::string state_spec;

    auto *c_interfere = app.add_subcommand("interfere", "Multi-slit interference table and Sorkin quantities");
    c_interfere->add_option("--theory", interfere.theory, "classical | quantum | cube")->capture_default_str();
    c_interfere->add_option("--k", interfere.k, "Number of slits")->capture_default_str();
    c_interfere->add_option("--state", interfere.state, "Initial state (registry name, amplitudes or JSON file)");
    c_interfere->add_option("--transform", interfere.transform, "Evolution (JSON file; default per theory)");
    c_interfere->add_option("--trials", interfere.trials, "Random instances to sweep")->capture_default_str();
    c_interfere->add_option("--seed", interfere.seed, "Sweep seed")->capture_default_str();
    add_output_flags(c_interfere, o, true);

    auto *c_lg = app.add_subcommand("lg", "Leggett-Garg correlations and K");
    c_lg->add_option("--theory", lg.theory, "classical | quantum | cube")->capture_default_str();
    c_lg->add_option("--trials", lg.trials, "Random instances to sweep for max K")->capture_default_str();
    c_lg->add_option("--seed", lg.seed, "Sweep seed")->capture_default_str();
    add_output_flags(c_lg, o, true);

    auto *c_tomo = app.add_subcommand("tomo", "Reconstruct the triple element of a three-level cube");
    c_tomo->add_option("--state", tomo.state, "State to reconstruct")->required();
    auto *exact = c_tomo->add_flag("--exact", tomo.exact, "Use exact probabilities");
    c_tomo->add_option("--shots", tomo.shots, "Shots per protocol")->excludes(exact);
    c_tomo->add_option("--seed", tomo.seed, "Sampling seed")->capture_default_str();
    c_tomo->add_option("--transform", tomo.transform, "Transform JSON file (default: canonical T)");
    add_output_flags(c_tomo, o, true);

    auto *c_check = app.add_subcommand("check", "Run the invariant suite");
    c_check->add_option("--transform", check.transform, "Transform JSON file to check (default: canonical T)");
    c_check->add_option("--seed", check.seed, "Seed for randomized checks")->capture_default_str();
    c_check->add_option("--trials", check.trials, "Samples per randomized check")->capture_default_str();
    add_output_flags(c_check, o, false);

    auto *c_state = app.add_subcommand("state", "Show a registry state, or list the registry");
    c_state->add_option("--state,name", state_spec, "State spec");
    add_output_flags(c_state, o, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (c_interfere->parsed()) {
            return cmd_interfere(interfere, o, out);
        }
        if (c_lg->parsed()) {
            return cmd_lg(lg, o, out);
        }
        if (c_tomo->parsed()) {
            return cmd_tomo(tomo, o, out);
        }
        if (c_check->parsed()) {
            return cmd_check(check, o, out);
        }
        return cmd_state(state_spec, o, out);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInvariantFailure;
    }
}

}  // namespace dcube
