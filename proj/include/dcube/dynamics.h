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

#ifndef DCUBE_DYNAMICS_H
#define DCUBE_DYNAMICS_H

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "dcube/cube.h"
#include "dcube/rng.h"

namespace dcube {

using Matrix5c = Eigen::Matrix<Complex, 5, 5>;
using Vector5c = Eigen::Matrix<Complex, 5, 1>;

/// The five three-level tensors E1..E5: E1..E3 are the basis cubes; E4 holds
/// 1/sqrt 3 on the cyclic positions (123, 231, 312) and E5 on the anti-cyclic
/// ones (132, 213, 321). E4 and E5 are not Hermitian on their own.
const std::array<Tensor3, 5> &subspace_basis();

/// Coordinates of a three-level cube along E1..E5.
struct CoefficientVector {
    Vector5c c = Vector5c::Zero();

    /// c1..c3 real and c5 = conj(c4), within tol.
    bool is_hermitian_representable(double tol = 1e-10) const;
};

struct Projection {
    CoefficientVector coefficients;
    /// Frobenius norm of the cube minus its reconstruction from the coefficients.
    double residual = 0;
};

/// c_a = (E_a, rho). Throws std::invalid_argument unless the cube has 3 levels.
Projection project(const HermitianCube &cube);

/// Cube with diagonal (c1, c2, c3), triple element c4 / sqrt 3, no pair elements.
/// Throws std::invalid_argument if c is not Hermitian-representable.
HermitianCube reconstruct(const CoefficientVector &c);

/// A 5x5 transformation of the E-subspace.
class TransformT {
   public:
    TransformT() : matrix_(canonical_matrix()) {
    }
    explicit TransformT(const Matrix5c &m) : matrix_(m) {
    }

    /// The involution mapping e_n to rho_n whose fourth and fifth columns are
    /// (1, w*, w, 1, 0) / 2 and (1, w, w*, 0, 1) / 2.
    static Matrix5c canonical_matrix();
    static TransformT canonical() {
        return TransformT(canonical_matrix());
    }

    const Matrix5c &matrix() const {
        return matrix_;
    }

    double unitarity_defect() const;
    double involution_defect() const;
    /// Largest deviation of T e_n from the rho_n coordinate vectors.
    double basis_map_defect() const;
    /// Largest deviation from commuting with the conjugation that fixes
    /// Hermitian coefficient vectors (complex conjugate, then swap c4 and c5).
    double hermiticity_defect() const;

    /// Every invariant a loaded transform must satisfy, as readable failures.
    std::vector<std::string> violations(double tol = kAlgebraTol) const;

   private:
    Matrix5c matrix_;
};

/// reconstruct(T project(cube)).
/// Throws std::domain_error when the cube has components outside the E-subspace
/// (residual > 1e-9); T is only defined on that subspace.
HermitianCube apply_T(const TransformT &t, const HermitianCube &cube);

/// Applies T to the three paths (a, b, c) of an N-level cube (0-based,
/// distinct). The diagonal elements of those paths and the element rho_abc are
/// transformed, elements whose indices mix these paths with other paths are
/// set to zero, and elements on the other paths alone are left unchanged. Pair
/// elements with both indices inside the triple must vanish (domain_error
/// otherwise). For N = 3 and paths (0, 1, 2) this equals apply_T.
HermitianCube apply_T_on_paths(const TransformT &t, const HermitianCube &cube, std::array<size_t, 3> paths);

/// Diagonal of T project(cube) for a three-level cube.
///
/// This is the standard-basis outcome distribution after T for every unitary
/// extension of T that leaves the E-subspace invariant: such an extension also
/// leaves the orthogonal complement invariant, and the complement carries no
/// diagonal weight. It is therefore defined for cubes outside the subspace.
std::array<double, 3> transformed_probabilities(const TransformT &t, const HermitianCube &cube);

/// Orthogonality constraints on candidate fourth and fifth columns (a, b):
///   a2 + a3 + a4 + a5 = 0,  a1 + a3 + w* a4 + w a5 = 0,  a1 + a2 + w a4 + w* a5 = 0
/// (likewise for b) and sum conj(a_i) b_i = 0, all within 1e-10.
bool verify_T_constraints(const Vector5c &a, const Vector5c &b);

struct ObstructionScan {
    size_t samples = 0;
    /// Over all samples and column pairs: smallest and largest |<col_i, col_j>|.
    double min_pair_overlap = 0;
    double max_pair_overlap = 0;
    /// Smallest per-sample worst overlap; a unitary would need 0.
    double best_sample_deviation = 0;
};

/// Samples 3x3 matrices with |U_ij|^2 = (1 - delta_ij) / 2 and random phases
/// (sample 0 has all phases zero) and measures how far their columns are from
/// orthogonal.
ObstructionScan qutrit_obstruction_scan(size_t samples, uint64_t seed);

}  // namespace dcube

#endif
