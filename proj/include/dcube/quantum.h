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

#ifndef DCUBE_QUANTUM_H
#define DCUBE_QUANTUM_H

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcube/cube.h"
#include "dcube/rng.h"

namespace dcube {

using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;
using MatrixR = Eigen::MatrixXd;

/// N x N complex matrix meant to hold a quantum state. Construction does not
/// validate; state_violation() reports which invariant fails, if any.
struct DensityMatrix {
    MatrixC entries;

    DensityMatrix() = default;
    explicit DensityMatrix(MatrixC m) : entries(std::move(m)) {
    }

    size_t dim() const {
        return static_cast<size_t>(entries.rows());
    }
    /// Hermitian within 1e-12, unit trace within tol, eigenvalues >= -tol.
    std::string state_violation(double tol = kStateTol) const;
    bool is_valid_state(double tol = kStateTol) const {
        return state_violation(tol).empty();
    }
    double min_eigenvalue() const;

    static DensityMatrix pure(const VectorC &psi);
    static DensityMatrix maximally_mixed(size_t dim);
};

/// Normalized amplitude vector. Throws std::invalid_argument if |psi| != 1 within tol.
class PureStateVector {
   public:
    explicit PureStateVector(VectorC amplitudes);
    const VectorC &amplitudes() const {
        return amplitudes_;
    }
    size_t dim() const {
        return static_cast<size_t>(amplitudes_.size());
    }
    Complex operator[](size_t i) const {
        return amplitudes_(static_cast<Eigen::Index>(i));
    }

   private:
    VectorC amplitudes_;
};

/// Throws std::invalid_argument unless U^dagger U = 1 within 1e-10.
class UnitaryMatrix {
   public:
    explicit UnitaryMatrix(MatrixC entries);
    const MatrixC &entries() const {
        return entries_;
    }
    size_t dim() const {
        return static_cast<size_t>(entries_.rows());
    }
    /// Largest entry of |U^dagger U - 1|.
    static double unitarity_defect(const MatrixC &m);

   private:
    MatrixC entries_;
};

struct BlochVector {
    double x1 = 0, x2 = 0, x3 = 0;
    double norm() const;
};

/// Column-stochastic matrix: entries >= 0, each column sums to 1.
using StochasticMatrix = MatrixR;
std::string stochastic_violation(const StochasticMatrix &m, double tol = kStateTol);

/// Maps a density matrix onto the z = 0 slice of cube space:
/// rho_iii = rho_ii, rho_iij = sqrt(2/3) Re rho_ij, rho_ijj = sqrt(2/3) Im rho_ij (i < j).
/// Throws std::invalid_argument if rho is not a valid state.
HermitianCube embed_matrix(const DensityMatrix &rho);

struct QuantumPart {
    DensityMatrix matrix;
    std::vector<Complex> triples;  ///< triple elements in storage order
    bool positive = false;         ///< matrix passes the density-matrix checks
};

/// Inverts the embedding on the two-index elements; triples are returned as-is.
QuantumPart extract_quantum_part(const HermitianCube &cube);

/// Two-level cube (sigma_0 + x . sigma) / 2. Throws std::invalid_argument if |x| > 1 + tol.
HermitianCube embed_bloch(const BlochVector &v);
/// Inverse of embed_bloch for 2-level cubes.
BlochVector bloch_of(const HermitianCube &cube);
/// Two-level Pauli cube sigma_a, a in {0, 1, 2, 3}.
HermitianCube pauli_cube(int a);

struct QuantumLudersResult {
    double probability = 0;
    std::optional<DensityMatrix> post;  ///< empty when the outcome is absorbed
    bool absorbed() const {
        return !post.has_value();
    }
};

/// Projective update rho -> P rho P / Tr(P rho) for P projecting on the given
/// (0-based) basis indices. Throws std::invalid_argument on an empty or
/// out-of-range block.
QuantumLudersResult quantum_luders(const DensityMatrix &rho, std::span<const size_t> block);

/// U_jk = exp(2 pi i jk / N) / sqrt(N).
UnitaryMatrix dft_unitary(size_t dim);

/// Haar-random unitary (QR of a complex Ginibre matrix with phase correction).
UnitaryMatrix random_unitary(size_t dim, Rng &rng);
/// Haar-random pure state.
PureStateVector random_pure_state(size_t dim, Rng &rng);
/// Random full-rank mixed state G G^dagger / Tr(G G^dagger).
DensityMatrix random_density_matrix(size_t dim, Rng &rng);
/// Random probability vector (flat Dirichlet).
std::vector<double> random_probability_vector(size_t dim, Rng &rng);
/// Random column-stochastic matrix with flat-Dirichlet columns.
StochasticMatrix random_stochastic_matrix(size_t dim, Rng &rng);

}  // namespace dcube

#endif
