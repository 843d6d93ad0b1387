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

#include "dcube/experiments.h"

#include <bit>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "dcube/measurement.h"
#include "dcube/states.h"

namespace dcube {

namespace {

template <class State>
struct Branch {
    double probability = 0;
    std::optional<State> post;
};

class CubeEngine {
   public:
    using State = HermitianCube;
    explicit CubeEngine(const CubeModel &m) : m_(m) {
    }
    size_t levels() const {
        return m_.initial.levels();
    }
    State initial() const {
        return m_.initial;
    }
    State evolve(const State &s, size_t) const {
        State out = s;
        for (const auto &paths : m_.stages) {
            bool whole = out.levels() == 3 && paths == std::array<size_t, 3>{0, 1, 2};
            out = whole ? apply_T(m_.transform, out) : apply_T_on_paths(m_.transform, out, paths);
        }
        return out;
    }
    Branch<State> measure(const State &s, std::span<const size_t> block) const {
        LudersResult r = luders_update(s, block);
        return {r.probability, std::move(r.post)};
    }
    std::vector<double> probabilities(const State &s) const {
        std::vector<double> p;
        for (double d : s.diag_values()) {
            p.push_back(std::max(0.0, d));
        }
        return p;
    }

   private:
    const CubeModel &m_;
};

class QuantumEngine {
   public:
    using State = DensityMatrix;
    explicit QuantumEngine(const QuantumModel &m) : m_(m) {
    }
    size_t levels() const {
        return m_.initial.dim();
    }
    State initial() const {
        return m_.initial;
    }
    State evolve(const State &s, size_t step) const {
        const MatrixC &u = m_.unitaries[step % m_.unitaries.size()].entries();
        return DensityMatrix(u * s.entries * u.adjoint());
    }
    Branch<State> measure(const State &s, std::span<const size_t> block) const {
        QuantumLudersResult r = quantum_luders(s, block);
        return {r.probability, std::move(r.post)};
    }
    std::vector<double> probabilities(const State &s) const {
        std::vector<double> p;
        for (Eigen::Index i = 0; i < s.entries.rows(); i++) {
            p.push_back(std::max(0.0, s.entries(i, i).real()));
        }
        return p;
    }

   private:
    const QuantumModel &m_;
};

class ClassicalEngine {
   public:
    using State = Eigen::VectorXd;
    explicit ClassicalEngine(const ClassicalModel &m) : m_(m) {
    }
    size_t levels() const {
        return m_.initial.size();
    }
    State initial() const {
        return Eigen::Map<const Eigen::VectorXd>(m_.initial.data(), static_cast<Eigen::Index>(m_.initial.size()));
    }
    State evolve(const State &s, size_t step) const {
        return m_.steps[step % m_.steps.size()] * s;
    }
    Branch<State> measure(const State &s, std::span<const size_t> block) const {
        State kept = State::Zero(s.size());
        double p = 0;
        for (size_t k : block) {
            auto kk = static_cast<Eigen::Index>(k);
            kept(kk) = std::max(0.0, s(kk));
            p += kept(kk);
        }
        Branch<State> out{p, std::nullopt};
        if (p > kStateTol) {
            out.post = kept / p;
        }
        return out;
    }
    std::vector<double> probabilities(const State &s) const {
        std::vector<double> p;
        for (Eigen::Index i = 0; i < s.size(); i++) {
            p.push_back(std::max(0.0, s(i)));
        }
        return p;
    }

   private:
    const ClassicalModel &m_;
};

template <class F>
decltype(auto) with_engine(const TheoryModel &model, F &&f) {
    return std::visit(
        [&](const auto &m) -> decltype(auto) {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, CubeModel>) {
                return f(CubeEngine(m));
            } else if constexpr (std::is_same_v<M, QuantumModel>) {
                return f(QuantumEngine(m));
            } else {
                return f(ClassicalEngine(m));
            }
        },
        model);
}

template <class Engine>
std::pair<double, std::vector<double>> run_interferometer(const Engine &e, const SlitConfig &config) {
    std::vector<double> joint(e.levels(), 0.0);
    std::vector<size_t> open = config.open_slits();
    if (open.empty()) {
        return {0.0, joint};
    }
    auto branch = e.measure(e.evolve(e.initial(), 0), open);
    if (!branch.post) {
        return {branch.probability, joint};
    }
    std::vector<double> probs = e.probabilities(e.evolve(*branch.post, 1));
    for (size_t d = 0; d < joint.size(); d++) {
        joint[d] = branch.probability * probs[d];
    }
    return {branch.probability, joint};
}

void require_config_width(const TheoryModel &model, const SlitConfig &config) {
    if (config.slits() != levels_of(model)) {
        throw std::invalid_argument("slit configuration has " + std::to_string(config.slits()) +
                                    " slits but the interferometer has " + std::to_string(levels_of(model)) +
                                    " paths");
    }
}

template <class Engine>
LeggettGargResult run_leggett_garg(const Engine &e) {
    size_t n = e.levels();
    std::vector<size_t> plus{0};
    std::vector<size_t> minus;
    for (size_t k = 1; k < n; k++) {
        minus.push_back(k);
    }
    const std::array<std::pair<double, const std::vector<size_t> *>, 2> outcomes{
        std::pair{+1.0, &plus}, std::pair{-1.0, &minus}};

    auto correlation = [&](size_t first, size_t second, double &total) {
        auto state = e.initial();
        for (size_t t = 0; t < first; t++) {
            state = e.evolve(state, t);
        }
        double c = 0;
        total = 0;
        for (const auto &[a, block_a] : outcomes) {
            auto branch = e.measure(state, *block_a);
            if (!branch.post) {
                continue;
            }
            auto later = *branch.post;
            for (size_t t = first; t < second; t++) {
                later = e.evolve(later, t);
            }
            for (const auto &[b, block_b] : outcomes) {
                double pb = e.measure(later, *block_b).probability;
                c += a * b * branch.probability * pb;
                total += branch.probability * pb;
            }
        }
        return c;
    };

    LeggettGargResult r;
    r.c12 = correlation(0, 1, r.branch_totals[0]);
    r.c23 = correlation(1, 2, r.branch_totals[1]);
    r.c34 = correlation(2, 3, r.branch_totals[2]);
    r.c14 = correlation(0, 3, r.branch_totals[3]);
    r.k = std::abs(r.c12 - r.c23 + r.c34 + r.c14);
    return r;
}

void require_probability_vector(std::span<const double> v, const char *what) {
    double total = 0;
    for (double x : v) {
        if (!std::isfinite(x) || x < -kStateTol) {
            throw std::invalid_argument(std::string(what) + " has a negative or non-finite entry");
        }
        total += x;
    }
    if (std::abs(total - 1.0) > kStateTol) {
        throw std::invalid_argument(std::string(what) + " sums to " + std::to_string(total) + ", expected 1");
    }
}

HermitianCube pad_levels(const HermitianCube &cube, size_t levels) {
    HermitianCube out(levels);
    size_t n = cube.levels();
    for (size_t i = 0; i < n; i++) {
        out.set_diag(i, cube.diag(i));
        for (size_t j = i + 1; j < n; j++) {
            out.set_pair_re(i, j, cube.pair_re(i, j));
            out.set_pair_im(i, j, cube.pair_im(i, j));
            for (size_t k = j + 1; k < n; k++) {
                out.set_triple(i, j, k, cube.triple(i, j, k));
            }
        }
    }
    return out;
}

/// Three-level cubes inside the E-subspace: e_m and rho^(n)(e_m).
std::vector<HermitianCube> span_state_pool() {
    std::vector<HermitianCube> pool = standard_basis(3).members;
    for (int m = 0; m < 3; m++) {
        VectorC basis_vector = VectorC::Zero(3);
        basis_vector(m) = 1.0;
        PureStateVector psi(basis_vector);
        for (int n = 1; n <= 3; n++) {
            pool.push_back(rho_n_of_psi(psi, n));
        }
    }
    return pool;
}

std::vector<std::array<size_t, 3>> cube_stages(size_t k) {
    if (k == 3) {
        return {{0, 1, 2}};
    }
    if (k == 4) {
        return {{0, 1, 2}, {1, 2, 3}};
    }
    throw std::invalid_argument("the cube interferometer supports k = 3 or 4 paths, got " + std::to_string(k));
}

}  // namespace

std::string_view to_string(TheoryKind kind) {
    switch (kind) {
        case TheoryKind::Classical:
            return "classical";
        case TheoryKind::Quantum:
            return "quantum";
        case TheoryKind::Cube:
            return "cube";
    }
    return "?";
}

TheoryKind parse_theory(std::string_view text) {
    if (text == "classical") {
        return TheoryKind::Classical;
    }
    if (text == "quantum") {
        return TheoryKind::Quantum;
    }
    if (text == "cube") {
        return TheoryKind::Cube;
    }
    throw std::invalid_argument("unknown theory '" + std::string(text) + "' (classical, quantum, cube)");
}

SlitConfig::SlitConfig(size_t slits, unsigned mask) : slits_(slits), mask_(mask) {
    if (slits < 2 || slits > 16) {
        throw std::invalid_argument("slit count must be in 2..16");
    }
    if (mask >> slits) {
        throw std::invalid_argument("slit mask has bits beyond the slit count");
    }
}

SlitConfig SlitConfig::parse(std::string_view text) {
    unsigned mask = 0;
    for (size_t s = 0; s < text.size(); s++) {
        if (text[s] == '1') {
            mask |= 1u << s;
        } else if (text[s] != '0') {
            throw std::invalid_argument("slit configuration must be a string of 0/1, got '" + std::string(text) + "'");
        }
    }
    return SlitConfig(text.size(), mask);
}

std::vector<size_t> SlitConfig::open_slits() const {
    std::vector<size_t> open;
    for (size_t s = 0; s < slits_; s++) {
        if (!closed(s)) {
            open.push_back(s);
        }
    }
    return open;
}

std::string SlitConfig::to_string() const {
    std::string out;
    for (size_t s = 0; s < slits_; s++) {
        out += closed(s) ? '1' : '0';
    }
    return out;
}

TheoryKind kind_of(const TheoryModel &model) {
    return static_cast<TheoryKind>(model.index());
}

size_t levels_of(const TheoryModel &model) {
    return with_engine(model, [](const auto &e) {
        return e.levels();
    });
}

std::string model_violation(const TheoryModel &model) {
    return std::visit(
        [](const auto &m) -> std::string {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, CubeModel>) {
                if (std::string why = m.initial.state_violation(); !why.empty()) {
                    return "initial cube: " + why;
                }
                auto bad = m.transform.violations();
                if (!bad.empty()) {
                    return bad.front();
                }
                if (m.stages.empty()) {
                    return "cube model has no transformation stages";
                }
                for (const auto &paths : m.stages) {
                    for (size_t p : paths) {
                        if (p >= m.initial.levels()) {
                            return "transformation stage refers to a path beyond the cube levels";
                        }
                    }
                }
                return {};
            } else if constexpr (std::is_same_v<M, QuantumModel>) {
                if (std::string why = m.initial.state_violation(); !why.empty()) {
                    return "initial state: " + why;
                }
                if (m.unitaries.empty()) {
                    return "quantum model has no unitaries";
                }
                for (const auto &u : m.unitaries) {
                    if (u.dim() != m.initial.dim()) {
                        return "unitary dimension does not match the state";
                    }
                }
                return {};
            } else {
                double total = 0;
                for (double x : m.initial) {
                    if (x < -kStateTol) {
                        return "initial distribution has a negative entry";
                    }
                    total += x;
                }
                if (m.initial.size() < 2 || std::abs(total - 1.0) > kStateTol) {
                    return "initial distribution is not normalized";
                }
                if (m.steps.empty()) {
                    return "classical model has no stochastic matrices";
                }
                for (const auto &s : m.steps) {
                    if (static_cast<size_t>(s.rows()) != m.initial.size()) {
                        return "stochastic matrix dimension does not match the distribution";
                    }
                    if (std::string why = stochastic_violation(s); !why.empty()) {
                        return why;
                    }
                }
                return {};
            }
        },
        model);
}

TheoryModel reference_model(TheoryKind kind, size_t k) {
    if (k < 2) {
        throw std::invalid_argument("an interferometer needs at least 2 paths");
    }
    switch (kind) {
        case TheoryKind::Cube: {
            CubeModel m;
            m.stages = cube_stages(k);
            m.initial = HermitianCube::basis(k, 0);
            return m;
        }
        case TheoryKind::Quantum: {
            VectorC e1 = VectorC::Zero(static_cast<Eigen::Index>(k));
            e1(0) = 1.0;
            return QuantumModel{DensityMatrix::pure(e1), {dft_unitary(k)}};
        }
        case TheoryKind::Classical: {
            std::vector<double> e1(k, 0.0);
            e1[0] = 1.0;
            MatrixC dft = dft_unitary(k).entries();
            StochasticMatrix shadow = dft.cwiseAbs2();
            return ClassicalModel{std::move(e1), {shadow}};
        }
    }
    throw std::invalid_argument("unknown theory");
}

TheoryModel random_model(TheoryKind kind, size_t k, Rng &rng) {
    switch (kind) {
        case TheoryKind::Cube: {
            CubeModel m;
            m.stages = cube_stages(k);
            std::vector<HermitianCube> pool;
            for (const auto &c : span_state_pool()) {
                pool.push_back(k == 3 ? c : pad_levels(c, k));
            }
            if (k == 4) {
                pool.push_back(HermitianCube::basis(4, 3));
            }
            std::vector<double> w = random_probability_vector(pool.size(), rng);
            std::vector<std::pair<double, HermitianCube>> parts;
            for (size_t n = 0; n < pool.size(); n++) {
                parts.emplace_back(w[n], pool[n]);
            }
            m.initial = mix(parts);
            return m;
        }
        case TheoryKind::Quantum: {
            PureStateVector psi = random_pure_state(k, rng);
            UnitaryMatrix first = random_unitary(k, rng);
            UnitaryMatrix second = random_unitary(k, rng);
            return QuantumModel{DensityMatrix::pure(psi.amplitudes()), {first, second}};
        }
        case TheoryKind::Classical: {
            std::vector<double> p = random_probability_vector(k, rng);
            StochasticMatrix first = random_stochastic_matrix(k, rng);
            StochasticMatrix second = random_stochastic_matrix(k, rng);
            return ClassicalModel{std::move(p), {first, second}};
        }
    }
    throw std::invalid_argument("unknown theory");
}

std::vector<double> interferometer_distribution(const TheoryModel &model, const SlitConfig &config) {
    require_config_width(model, config);
    return with_engine(model, [&](const auto &e) {
        return run_interferometer(e, config).second;
    });
}

double interferometer_run(const TheoryModel &model, const SlitConfig &config, size_t detector) {
    std::vector<double> joint = interferometer_distribution(model, config);
    if (detector >= joint.size()) {
        throw std::invalid_argument("detector index out of range");
    }
    return joint[detector];
}

double filter_pass_probability(const TheoryModel &model, const SlitConfig &config) {
    require_config_width(model, config);
    return with_engine(model, [&](const auto &e) {
        return run_interferometer(e, config).first;
    });
}

std::vector<double> interference_table(const TheoryModel &model, size_t detector) {
    size_t k = levels_of(model);
    std::vector<double> table(size_t{1} << k);
    for (unsigned mask = 0; mask < table.size(); mask++) {
        table[mask] = interferometer_run(model, SlitConfig(k, mask), detector);
    }
    return table;
}

double sorkin_quantity(std::span<const double> table, size_t k) {
    return sorkin_subset(table, k, (1u << k) - 1);
}

double sorkin_quantity(const std::map<std::string, double> &table, size_t k) {
    std::vector<double> dense(size_t{1} << k);
    for (unsigned mask = 0; mask < dense.size(); mask++) {
        std::string key = SlitConfig(k, mask).to_string();
        auto it = table.find(key);
        if (it == table.end()) {
            throw std::invalid_argument("probability table is missing configuration " + key);
        }
        dense[mask] = it->second;
    }
    return sorkin_quantity(dense, k);
}

double sorkin_subset(std::span<const double> table, size_t k, unsigned subset_mask) {
    if (table.size() != (size_t{1} << k)) {
        throw std::invalid_argument("probability table needs 2^" + std::to_string(k) + " entries, has " +
                                    std::to_string(table.size()));
    }
    unsigned all = (1u << k) - 1;
    unsigned outside = all & ~subset_mask;
    double total = 0;
    // Iterate over the closed-slit patterns within the subset; slits outside stay closed.
    for (unsigned sub = subset_mask;; sub = (sub - 1) & subset_mask) {
        double sign = std::popcount(sub) % 2 == 0 ? 1.0 : -1.0;
        total += sign * table[sub | outside];
        if (sub == 0) {
            break;
        }
    }
    return total;
}

LeggettGargResult leggett_garg_run(const TheoryModel &model) {
    return with_engine(model, [](const auto &e) {
        return run_leggett_garg(e);
    });
}

LeggettGargSweep leggett_garg_sweep(TheoryKind kind, size_t trials, uint64_t seed) {
    if (trials == 0) {
        throw std::invalid_argument("leggett_garg_sweep needs at least one trial");
    }
    LeggettGargSweep result{kind, trials, seed, 0, 0};
    for (size_t trial = 0; trial < trials; trial++) {
        Rng rng(Rng::derive_seed(seed, trial));
        TheoryModel model = reference_model(kind, 3);
        if (trial > 0) {
            if (auto *q = std::get_if<QuantumModel>(&model)) {
                q->unitaries = {random_unitary(3, rng)};
            } else if (auto *c = std::get_if<ClassicalModel>(&model)) {
                c->steps = {random_stochastic_matrix(3, rng)};
            } else {
                model = random_model(TheoryKind::Cube, 3, rng);
            }
        }
        LeggettGargResult r = leggett_garg_run(model);
        result.max_k = std::max(result.max_k, r.k);
        for (double total : r.branch_totals) {
            result.max_branch_defect = std::max(result.max_branch_defect, std::abs(total - 1.0));
        }
    }
    return result;
}

TomographyResult tomography_reconstruct(std::array<double, 3> mu, std::array<double, 3> p) {
    require_probability_vector(mu, "detector distribution mu");
    require_probability_vector(p, "direct distribution p");
    const double s3 = std::sqrt(3.0);
    const std::array<double, 3> b{2 * mu[0] - p[1] - p[2], 2 * mu[1] - p[0] - p[2], 2 * mu[2] - p[0] - p[1]};
    const std::array<double, 3> a_re{2 * s3, -s3, -s3};
    const std::array<double, 3> a_im{0, 3, -3};
    // The two columns are orthogonal with squared norm 18 each.
    double re = 0, im = 0;
    for (size_t i = 0; i < 3; i++) {
        re += a_re[i] * b[i];
        im += a_im[i] * b[i];
    }
    re /= 18.0;
    im /= 18.0;
    double res2 = 0;
    for (size_t i = 0; i < 3; i++) {
        double r = b[i] - a_re[i] * re - a_im[i] * im;
        res2 += r * r;
    }
    return TomographyResult{Complex(re, im), std::sqrt(res2)};
}

std::array<double, 3> protocol_distribution(const HermitianCube &rho, CountProtocol protocol, const TransformT &t) {
    if (rho.levels() != 3) {
        throw std::invalid_argument("tomography protocols need a 3-level cube");
    }
    if (std::string why = rho.state_violation(); !why.empty()) {
        throw std::invalid_argument("invalid state: " + why);
    }
    std::array<double, 3> dist{};
    if (protocol == CountProtocol::Direct) {
        for (size_t i = 0; i < 3; i++) {
            dist[i] = rho.diag(i);
        }
    } else {
        dist = transformed_probabilities(t, rho);
    }
    require_probability_vector(dist, "detector distribution");
    for (double &x : dist) {
        x = std::max(0.0, x);
    }
    return dist;
}

std::array<uint64_t, 3> simulate_counts(const HermitianCube &rho, CountProtocol protocol, uint64_t shots, Rng &rng,
                                        const TransformT &t) {
    if (shots == 0) {
        throw std::invalid_argument("simulate_counts needs at least one shot");
    }
    std::array<double, 3> dist = protocol_distribution(rho, protocol, t);
    std::array<uint64_t, 3> counts{};
    for (uint64_t s = 0; s < shots; s++) {
        counts[rng.categorical(dist)]++;
    }
    return counts;
}

TomographyResult tomography_exact(const HermitianCube &rho, const TransformT &t) {
    return tomography_reconstruct(protocol_distribution(rho, CountProtocol::AfterT, t),
                                  protocol_distribution(rho, CountProtocol::Direct, t));
}

TomographyResult tomography_sampled(const HermitianCube &rho, uint64_t shots, Rng &rng, const TransformT &t) {
    auto direct = simulate_counts(rho, CountProtocol::Direct, shots, rng, t);
    auto after = simulate_counts(rho, CountProtocol::AfterT, shots, rng, t);
    std::array<double, 3> p{}, mu{};
    for (size_t i = 0; i < 3; i++) {
        p[i] = static_cast<double>(direct[i]) / static_cast<double>(shots);
        mu[i] = static_cast<double>(after[i]) / static_cast<double>(shots);
    }
    return tomography_reconstruct(mu, p);
}

SweepResult sorkin_sweep(TheoryKind kind, size_t k, size_t trials, uint64_t seed) {
    if (k < 2 || k > 4) {
        throw std::invalid_argument("sorkin_sweep supports k = 2, 3, 4");
    }
    if (kind == TheoryKind::Cube && k == 2) {
        throw std::invalid_argument("the cube theory needs at least 3 paths (two-level cubes are qubits)");
    }
    if (trials == 0) {
        throw std::invalid_argument("sorkin_sweep needs at least one trial");
    }
    SweepResult result{kind, k, trials, seed, 0, 0, {}};
    if (kind == TheoryKind::Cube && k == 4) {
        result.note = "cube k=4 composes T on paths (1,2,3) then (2,3,4)";
    }
    for (size_t trial = 0; trial < trials; trial++) {
        Rng rng(Rng::derive_seed(seed, trial));
        TheoryModel model = trial == 0 ? reference_model(kind, k) : random_model(kind, k, rng);
        for (size_t d = 0; d < k; d++) {
            std::vector<double> table = interference_table(model, d);
            result.max_abs_order_k = std::max(result.max_abs_order_k, std::abs(sorkin_quantity(table, k)));
            for (size_t a = 0; a < k; a++) {
                for (size_t b = a + 1; b < k; b++) {
                    double pair = sorkin_subset(table, k, (1u << a) | (1u << b));
                    result.max_abs_pairwise = std::max(result.max_abs_pairwise, std::abs(pair));
                }
            }
        }
    }
    return result;
}

}  // namespace dcube
