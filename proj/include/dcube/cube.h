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

#ifndef DCUBE_CUBE_H
#define DCUBE_CUBE_H

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dcube {

using Complex = std::complex<double>;

/// Modeling tolerance for state-validity predicates.
inline constexpr double kStateTol = 1e-9;
/// Floating-point tolerance for algebraic identities.
inline constexpr double kAlgebraTol = 1e-12;

/// Dense N x N x N complex tensor, row-major in (i, j, k).
class Tensor3 {
   public:
    explicit Tensor3(size_t levels) : levels_(levels), data_(levels * levels * levels) {
    }

    size_t levels() const {
        return levels_;
    }
    Complex &operator()(size_t i, size_t j, size_t k) {
        return data_[(i * levels_ + j) * levels_ + k];
    }
    const Complex &operator()(size_t i, size_t j, size_t k) const {
        return data_[(i * levels_ + j) * levels_ + k];
    }
    std::span<const Complex> values() const {
        return data_;
    }

    /// Sum of conj(a) * b over all entries.
    friend Complex contract(const Tensor3 &a, const Tensor3 &b);
    /// Frobenius norm of a - b.
    friend double distance(const Tensor3 &a, const Tensor3 &b);

   private:
    size_t levels_;
    std::vector<Complex> data_;
};

/// A Hermitian rank-3 tensor over N levels, stored by its independent elements.
///
/// Elements with two equal indices are real and invariant under every index
/// permutation. Elements with three distinct indices are invariant under cyclic
/// permutations and conjugated by any transposition. Storage (0-based):
///   diag(i)        = rho_iii
///   pair_re(i, j)  = rho_iij   (i < j)
///   pair_im(i, j)  = rho_ijj   (i < j)
///   triple(i,j,k)  = rho_ijk   (i < j < k)
///
/// States and effects share this type; normalization is the predicate
/// is_normalized_state(), not a separate type.
class HermitianCube {
   public:
    /// Zero cube. Throws std::invalid_argument for levels < 2.
    explicit HermitianCube(size_t levels);

    /// The basis cube e_n (single unit diagonal element), n 0-based.
    static HermitianCube basis(size_t levels, size_t n);

    size_t levels() const {
        return levels_;
    }

    double diag(size_t i) const;
    double pair_re(size_t i, size_t j) const;
    double pair_im(size_t i, size_t j) const;
    Complex triple(size_t i, size_t j, size_t k) const;

    void set_diag(size_t i, double v);
    void set_pair_re(size_t i, size_t j, double v);
    void set_pair_im(size_t i, size_t j, double v);
    void set_triple(size_t i, size_t j, size_t k, Complex v);

    /// Full-tensor element for arbitrary (0-based) indices, applying the symmetry rule.
    Complex element(size_t i, size_t j, size_t k) const;

    std::span<const double> diag_values() const {
        return diag_;
    }
    std::span<const double> pair_re_values() const {
        return pair_re_;
    }
    std::span<const double> pair_im_values() const {
        return pair_im_;
    }
    std::span<const Complex> triple_values() const {
        return triple_;
    }

    /// Number of independent real numbers held (N diag + 2 per pair + 2 per triple).
    size_t independent_reals() const;

    double trace() const;
    /// Sum of diagonal is 1 within tol and every diagonal element is >= -tol.
    bool is_normalized_state(double tol = kStateTol) const;
    /// Human-readable reason the cube is not a normalized state, or empty.
    std::string state_violation(double tol = kStateTol) const;

    /// Hermitian cubes form a real vector space.
    HermitianCube &operator+=(const HermitianCube &other);
    HermitianCube &operator*=(double s);
    friend HermitianCube operator+(HermitianCube a, const HermitianCube &b) {
        return a += b;
    }
    friend HermitianCube operator*(double s, HermitianCube a) {
        return a *= s;
    }

    bool operator==(const HermitianCube &other) const = default;

   private:
    size_t pair_index(size_t i, size_t j) const;
    size_t triple_index(size_t i, size_t j, size_t k) const;

    size_t levels_;
    std::vector<double> diag_;
    std::vector<double> pair_re_;
    std::vector<double> pair_im_;
    std::vector<Complex> triple_;
};

/// Materializes the full N^3 tensor.
Tensor3 expand_full(const HermitianCube &cube);

/// Reads the independent elements back out of a full tensor. The tensor is
/// assumed Hermitian; use hermiticity_defect() to check it first.
HermitianCube compress(const Tensor3 &tensor);

/// Largest violation of the cube symmetry rule over all entries of the tensor.
double hermiticity_defect(const Tensor3 &tensor);

/// Born-rule contraction sum_{ijk} conj(rho_ijk) sigma_ijk.
///
/// The result is real for Hermitian cubes; an imaginary residue above 1e-12
/// (relative to the magnitude of the sum) raises std::logic_error.
/// Throws std::invalid_argument on a level mismatch.
double inner(const HermitianCube &rho, const HermitianCube &sigma);

/// Convex combination of normalized states.
///
/// Throws std::invalid_argument on negative weights, weights not summing to 1,
/// mismatched levels, an empty list, or a component that is not a normalized state.
HermitianCube mix(std::span<const std::pair<double, HermitianCube>> components);
HermitianCube mix(std::initializer_list<std::pair<double, HermitianCube>> components);

/// Real parameter count N^2 - 1 + 2 C(N, 3) of a normalized N-level cube.
size_t parameter_count(size_t levels);

/// inner(rho, sigma) >= -tol.
bool pairwise_positivity(const HermitianCube &rho, const HermitianCube &sigma, double tol = kStateTol);

}  // namespace dcube

#endif
