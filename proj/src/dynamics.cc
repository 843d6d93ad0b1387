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

#include "dcube/dynamics.h"

#include <algorithm>
#include <initializer_list>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dcube/states.h"

namespace dcube {

namespace {

const double kInvSqrt3 = 1.0 / std::sqrt(3.0);
const double kSpanTol = 1e-9;

std::array<Tensor3, 5> build_subspace_basis() {
    std::array<Tensor3, 5> e{Tensor3(3), Tensor3(3), Tensor3(3), Tensor3(3), Tensor3(3)};
    for (size_t n = 0; n < 3; n++) {
        e[n](n, n, n) = 1.0;
    }
    e[3](0, 1, 2) = e[3](1, 2, 0) = e[3](2, 0, 1) = kInvSqrt3;
    e[4](0, 2, 1) = e[4](1, 0, 2) = e[4](2, 1, 0) = kInvSqrt3;
    return e;
}

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(3);
    out << v;
    return out.str();
}

}  // namespace

const std::array<Tensor3, 5> &subspace_basis() {
    static const std::array<Tensor3, 5> basis = build_subspace_basis();
    return basis;
}

bool CoefficientVector::is_hermitian_representable(double tol) const {
    for (int n = 0; n < 3; n++) {
        if (std::abs(c(n).imag()) > tol) {
            return false;
        }
    }
    return std::abs(c(4) - std::conj(c(3))) <= tol;
}

Projection project(const HermitianCube &cube) {
    if (cube.levels() != 3) {
        throw std::invalid_argument("projection onto the E-subspace needs a 3-level cube");
    }
    Tensor3 full = expand_full(cube);
    const auto &basis = subspace_basis();
    Projection out;
    Tensor3 rebuilt(3);
    for (int a = 0; a < 5; a++) {
        Complex ca = contract(basis[static_cast<size_t>(a)], full);
        out.coefficients.c(a) = ca;
        for (size_t i = 0; i < 3; i++) {
            for (size_t j = 0; j < 3; j++) {
                for (size_t k = 0; k < 3; k++) {
                    rebuilt(i, j, k) += ca * basis[static_cast<size_t>(a)](i, j, k);
                }
            }
        }
    }
    out.residual = distance(full, rebuilt);
    return out;
}

HermitianCube reconstruct(const CoefficientVector &coeffs) {
    if (!coeffs.is_hermitian_representable()) {
        throw std::invalid_argument("coefficient vector does not represent a Hermitian cube "
                                    "(needs real c1..c3 and c5 = conj(c4))");
    }
    HermitianCube cube(3);
    for (int n = 0; n < 3; n++) {
        cube.set_diag(static_cast<size_t>(n), coeffs.c(n).real());
    }
    // Split any rounding asymmetry between c4 and conj(c5).
    Complex c4 = 0.5 * (coeffs.c(3) + std::conj(coeffs.c(4)));
    cube.set_triple(0, 1, 2, c4 * kInvSqrt3);
    return cube;
}

Matrix5c TransformT::canonical_matrix() {
    const Complex w = omega();
    const Complex wc = std::conj(w);
    Matrix5c t;
    // clang-format off
    t << 0, 1,  1,  1,  1,
         1, 0,  1,  wc, w,
         1, 1,  0,  w,  wc,
         1, w,  wc, 1,  0,
         1, wc, w,  0,  1;
    // clang-format on
    return t * 0.5;
}

double TransformT::unitarity_defect() const {
    return (matrix_.adjoint() * matrix_ - Matrix5c::Identity()).cwiseAbs().maxCoeff();
}

double TransformT::involution_defect() const {
    return (matrix_ * matrix_ - Matrix5c::Identity()).cwiseAbs().maxCoeff();
}

double TransformT::basis_map_defect() const {
    const auto basis = nonquantum_basis();
    double worst = 0;
    for (int n = 0; n < 3; n++) {
        Vector5c target = project(basis.members[static_cast<size_t>(n)]).coefficients.c;
        worst = std::max(worst, (matrix_.col(n) - target).cwiseAbs().maxCoeff());
    }
    return worst;
}

double TransformT::hermiticity_defect() const {
    Matrix5c swap = Matrix5c::Identity();
    swap(3, 3) = swap(4, 4) = 0;
    swap(3, 4) = swap(4, 3) = 1;
    return (matrix_ * swap - swap * matrix_.conjugate()).cwiseAbs().maxCoeff();
}

std::vector<std::string> TransformT::violations(double tol) const {
    std::vector<std::string> out;
    if (!matrix_.allFinite()) {
        out.push_back("transform has a non-finite entry");
        return out;
    }
    if (double d = unitarity_defect(); d > tol) {
        out.push_back("transform is not unitary (defect " + fmt(d) + ")");
    }
    if (double d = involution_defect(); d > tol) {
        out.push_back("transform is not an involution (defect " + fmt(d) + ")");
    }
    if (double d = basis_map_defect(); d > tol) {
        out.push_back("transform does not map e_n to rho_n (defect " + fmt(d) + ")");
    }
    if (double d = hermiticity_defect(); d > tol) {
        out.push_back("transform does not preserve Hermitian cubes (defect " + fmt(d) + ")");
    }
    if (!verify_T_constraints(matrix_.col(3), matrix_.col(4))) {
        out.push_back("transform columns 4 and 5 violate the orthogonality constraints");
    }
    return out;
}

HermitianCube apply_T(const TransformT &t, const HermitianCube &cube) {
    Projection p = project(cube);
    if (p.residual > kSpanTol) {
        throw std::domain_error("cube lies outside the E-subspace (residual " + fmt(p.residual) +
                                "); T is only defined on that subspace");
    }
    CoefficientVector image{t.matrix() * p.coefficients.c};
    return reconstruct(image);
}

HermitianCube apply_T_on_paths(const TransformT &t, const HermitianCube &cube, std::array<size_t, 3> paths) {
    size_t n = cube.levels();
    std::array<size_t, 3> sorted = paths;
    std::sort(sorted.begin(), sorted.end());
    if (sorted[2] >= n || sorted[0] == sorted[1] || sorted[1] == sorted[2]) {
        throw std::invalid_argument("T needs three distinct in-range paths");
    }
    HermitianCube sub(3);
    for (size_t x = 0; x < 3; x++) {
        sub.set_diag(x, cube.diag(paths[x]));
        for (size_t y = x + 1; y < 3; y++) {
            size_t lo = std::min(paths[x], paths[y]);
            size_t hi = std::max(paths[x], paths[y]);
            if (std::abs(cube.pair_re(lo, hi)) > kSpanTol || std::abs(cube.pair_im(lo, hi)) > kSpanTol) {
                throw std::domain_error("cube has pair elements on paths " + std::to_string(lo + 1) + "," +
                                        std::to_string(hi + 1) + "; T is undefined there");
            }
        }
    }
    sub.set_triple(0, 1, 2, cube.element(paths[0], paths[1], paths[2]));
    HermitianCube image = apply_T(t, sub);

    std::vector<bool> acted(n, false);
    for (size_t p : paths) {
        acted[p] = true;
    }
    auto mixed = [&](std::initializer_list<size_t> idx) {
        bool in = false, out = false;
        for (size_t i : idx) {
            (acted[i] ? in : out) = true;
        }
        return in && out;
    };
    HermitianCube out = cube;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (mixed({i, j})) {
                out.set_pair_re(i, j, 0);
                out.set_pair_im(i, j, 0);
            }
            for (size_t k = j + 1; k < n; k++) {
                if (mixed({i, j, k})) {
                    out.set_triple(i, j, k, 0);
                }
            }
        }
    }
    for (size_t x = 0; x < 3; x++) {
        out.set_diag(paths[x], image.diag(x));
    }
    Complex z = image.triple(0, 1, 2);
    int inversions = (paths[0] > paths[1]) + (paths[0] > paths[2]) + (paths[1] > paths[2]);
    out.set_triple(sorted[0], sorted[1], sorted[2], inversions % 2 == 0 ? z : std::conj(z));
    return out;
}

std::array<double, 3> transformed_probabilities(const TransformT &t, const HermitianCube &cube) {
    Vector5c image = t.matrix() * project(cube).coefficients.c;
    return {image(0).real(), image(1).real(), image(2).real()};
}

bool verify_T_constraints(const Vector5c &a, const Vector5c &b) {
    const Complex w = omega();
    const Complex wc = std::conj(w);
    const double tol = 1e-10;
    auto column_ok = [&](const Vector5c &v) {
        return std::abs(v(1) + v(2) + v(3) + v(4)) <= tol &&
               std::abs(v(0) + v(2) + wc * v(3) + w * v(4)) <= tol &&
               std::abs(v(0) + v(1) + w * v(3) + wc * v(4)) <= tol;
    };
    return column_ok(a) && column_ok(b) && std::abs(a.dot(b)) <= tol;
}

ObstructionScan qutrit_obstruction_scan(size_t samples, uint64_t seed) {
    if (samples == 0) {
        throw std::invalid_argument("obstruction scan needs at least one sample");
    }
    Rng rng(seed);
    const double amp = 1.0 / std::sqrt(2.0);
    ObstructionScan scan;
    scan.samples = samples;
    scan.min_pair_overlap = INFINITY;
    scan.best_sample_deviation = INFINITY;
    for (size_t s = 0; s < samples; s++) {
        Eigen::Matrix3cd u = Eigen::Matrix3cd::Zero();
        for (int i = 0; i < 3; i++) {
            for (int j = 0; j < 3; j++) {
                if (i != j) {
                    u(i, j) = std::polar(amp, s == 0 ? 0.0 : rng.phase());
                }
            }
        }
        double worst = 0;
        for (int i = 0; i < 3; i++) {
            for (int j = i + 1; j < 3; j++) {
                double overlap = std::abs(u.col(i).dot(u.col(j)));
                worst = std::max(worst, overlap);
                scan.min_pair_overlap = std::min(scan.min_pair_overlap, overlap);
                scan.max_pair_overlap = std::max(scan.max_pair_overlap, overlap);
            }
        }
        scan.best_sample_deviation = std::min(scan.best_sample_deviation, worst);
    }
    return scan;
}

}  // namespace dcube
