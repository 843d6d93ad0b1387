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

#ifndef DCUBE_EXPERIMENTS_H
#define DCUBE_EXPERIMENTS_H

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dcube/cube.h"
#include "dcube/dynamics.h"
#include "dcube/quantum.h"
#include "dcube/rng.h"

namespace dcube {

enum class TheoryKind { Classical, Quantum, Cube };

std::string_view to_string(TheoryKind kind);
/// "classical" | "quantum" | "cube"; throws std::invalid_argument otherwise.
TheoryKind parse_theory(std::string_view text);

/// Open/closed state of k slits. Text form is one digit per slit, slit 1
/// first, 0 = open and 1 = closed ("100" has slit 1 blocked).
class SlitConfig {
   public:
    /// Bit s of mask set means slit s (0-based) is closed.
    SlitConfig(size_t slits, unsigned mask);
    static SlitConfig parse(std::string_view text);

    size_t slits() const {
        return slits_;
    }
    unsigned mask() const {
        return mask_;
    }
    bool closed(size_t s) const {
        return (mask_ >> s) & 1u;
    }
    std::vector<size_t> open_slits() const;
    std::string to_string() const;

   private:
    size_t slits_;
    unsigned mask_;
};

/// Density-cube theory: T applied to each listed path triple in order at every step.
struct CubeModel {
    HermitianCube initial = HermitianCube::basis(3, 0);
    TransformT transform = TransformT::canonical();
    std::vector<std::array<size_t, 3>> stages{{0, 1, 2}};
};

/// Quantum baseline. Step s applies unitaries[s % size].
struct QuantumModel {
    DensityMatrix initial;
    std::vector<UnitaryMatrix> unitaries;
};

/// Classical baseline: probability vector evolved by column-stochastic matrices.
struct ClassicalModel {
    std::vector<double> initial;
    std::vector<StochasticMatrix> steps;
};

using TheoryModel = std::variant<ClassicalModel, QuantumModel, CubeModel>;

TheoryKind kind_of(const TheoryModel &model);
size_t levels_of(const TheoryModel &model);
/// First violated invariant of the model's inputs, or empty.
std::string model_violation(const TheoryModel &model);

/// The deterministic reference instance for k paths:
///   cube      e_1 through T on (1,2,3) (k = 3), or T on (1,2,3) then (2,3,4) (k = 4)
///   quantum   |e_1> through the k-point DFT
///   classical e_1 through the uniform stochastic matrix (|DFT|^2)
/// Throws std::invalid_argument for unsupported (theory, k).
TheoryModel reference_model(TheoryKind kind, size_t k);

/// A random instance for k paths (random states and transforms per theory).
TheoryModel random_model(TheoryKind kind, size_t k, Rng &rng);

/// Joint pass-and-detect probability at every detector: evolve once, filter
/// on the open slits, evolve once more, read out. Closed configurations pass
/// nothing. Throws std::invalid_argument if the slit count differs from the
/// model's levels.
std::vector<double> interferometer_distribution(const TheoryModel &model, const SlitConfig &config);
double interferometer_run(const TheoryModel &model, const SlitConfig &config, size_t detector);
/// Probability that the filter lets the system through.
double filter_pass_probability(const TheoryModel &model, const SlitConfig &config);

/// All 2^k joint probabilities at one detector, indexed by SlitConfig::mask().
std::vector<double> interference_table(const TheoryModel &model, size_t detector);

/// sum over configs of (-1)^{#closed} p(config). The table is indexed by mask
/// and must have exactly 2^k entries.
double sorkin_quantity(std::span<const double> table, size_t k);
/// Same, from text-keyed configurations; throws if any of the 2^k is missing.
double sorkin_quantity(const std::map<std::string, double> &table, size_t k);
/// Sorkin quantity of the slits in subset_mask with every other slit closed,
/// e.g. the pairwise I_12 inside a triple-slit table.
double sorkin_subset(std::span<const double> table, size_t k, unsigned subset_mask);

struct LeggettGargResult {
    double c12 = 0, c23 = 0, c34 = 0, c14 = 0;
    double k = 0;
    /// Total branch probability of each measured pair (12, 23, 34, 14).
    std::array<double, 4> branch_totals{};
};

/// Two-time correlations of A = +1 on level 1, -1 elsewhere, measured at
/// t_i and t_j with one model step between consecutive times, by exact
/// enumeration of outcome branches.
LeggettGargResult leggett_garg_run(const TheoryModel &model);

struct LeggettGargSweep {
    TheoryKind theory = TheoryKind::Quantum;
    size_t trials = 0;
    uint64_t seed = 0;
    double max_k = 0;
    /// Largest |1 - branch total| seen, a completeness check on the enumeration.
    double max_branch_defect = 0;
};

/// Trial 0 is reference_model(kind, 3). Later trials keep the initial state
/// e_1 and draw a random step: a Haar unitary (quantum), a random stochastic
/// matrix (classical), or a random mixture of E-subspace states as the
/// initial cube (cube theory, T fixed).
LeggettGargSweep leggett_garg_sweep(TheoryKind kind, size_t trials, uint64_t seed);

struct TomographyResult {
    Complex z;
    double residual = 0;  ///< norm of the least-squares residual
};

/// Least-squares solution for z of
///   2 mu1 - p2 - p3 =  2 sqrt3 Re z
///   2 mu2 - p1 - p3 = -sqrt3 Re z + 3 Im z
///   2 mu3 - p1 - p2 = -sqrt3 Re z - 3 Im z
/// Throws std::invalid_argument unless mu and p are probability vectors.
TomographyResult tomography_reconstruct(std::array<double, 3> mu, std::array<double, 3> p);

enum class CountProtocol { Direct, AfterT };

/// Exact detector distribution for a three-level cube under the protocol.
std::array<double, 3> protocol_distribution(const HermitianCube &rho, CountProtocol protocol,
                                            const TransformT &t = TransformT::canonical());

/// Multinomial sample of protocol_distribution, one categorical draw per shot.
std::array<uint64_t, 3> simulate_counts(const HermitianCube &rho, CountProtocol protocol, uint64_t shots, Rng &rng,
                                        const TransformT &t = TransformT::canonical());

/// Reconstruction from exact probabilities.
TomographyResult tomography_exact(const HermitianCube &rho, const TransformT &t = TransformT::canonical());
/// Reconstruction from sampled frequencies, shots per protocol.
TomographyResult tomography_sampled(const HermitianCube &rho, uint64_t shots, Rng &rng,
                                    const TransformT &t = TransformT::canonical());

struct SweepResult {
    TheoryKind theory = TheoryKind::Quantum;
    size_t k = 0;
    size_t trials = 0;
    uint64_t seed = 0;
    double max_abs_order_k = 0;  ///< max |I_1..k| over trials and detectors
    double max_abs_pairwise = 0; ///< max |I_ij| (others closed) over trials, detectors, pairs
    std::string note;
};

/// Trial 0 is reference_model(kind, k); trial t > 0 is random_model with seed
/// Rng::derive_seed(seed, t). Throws std::invalid_argument for k outside 2..4
/// or the cube theory at k = 2.
SweepResult sorkin_sweep(TheoryKind kind, size_t k, size_t trials, uint64_t seed);

}  // namespace dcube

#endif
