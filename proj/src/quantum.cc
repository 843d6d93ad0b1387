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

#include "dcube/quantum.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dcube {

namespace {

const double kEmbedScale = std::sqrt(2.0 / 3.0);
const double kBlochScale = 1.0 / std::sqrt(6.0);

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

MatrixC ginibre(size_t dim, Rng &rng) {
    auto n = static_cast<Eigen::Index>(dim);
    MatrixC g(n, n);
    for (Eigen::Index r = 0; r < n; r++) {
        for (Eigen::Index c = 0; c < n; c++) {
            g(r, c) = Complex(rng.normal(), rng.normal()) / std::sqrt(2.0);
        }
    }
    return g;
}

}  // namespace

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<MatrixC> solver(entries, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

std::string DensityMatrix::state_violation(double tol) const {
    if (entries.rows() == 0 || entries.rows() != entries.cols()) {
        return "density matrix must be square and non-empty";
    }
    if (!entries.allFinite()) {
        return "density matrix has a non-finite entry";
    }
    double herm = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kAlgebraTol) {
        return "density matrix is not Hermitian (defect " + fmt(herm) + ")";
    }
    Complex tr = entries.trace();
    if (std::abs(tr - 1.0) > tol) {
        return "density matrix trace is " + fmt(tr.real()) + ", expected 1";
    }
    double lowest = min_eigenvalue();
    if (lowest < -tol) {
        return "density matrix has negative eigenvalue " + fmt(lowest);
    }
    return {};
}

DensityMatrix DensityMatrix::pure(const VectorC &psi) {
    return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(size_t dim) {
    auto n = static_cast<Eigen::Index>(dim);
    return DensityMatrix(MatrixC::Identity(n, n) / static_cast<double>(dim));
}

PureStateVector::PureStateVector(VectorC amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw std::invalid_argument("pure state needs at least one amplitude");
    }
    double norm2 = amplitudes_.squaredNorm();
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kStateTol) {
        throw std::invalid_argument("pure state is not normalized (|psi|^2 = " + fmt(norm2) + ")");
    }
}

double UnitaryMatrix::unitarity_defect(const MatrixC &m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        return INFINITY;
    }
    return (m.adjoint() * m - MatrixC::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

UnitaryMatrix::UnitaryMatrix(MatrixC entries) : entries_(std::move(entries)) {
    double defect = unitarity_defect(entries_);
    if (!(defect <= 1e-10)) {
        throw std::invalid_argument("matrix is not unitary (defect " + fmt(defect) + ")");
    }
}

double BlochVector::norm() const {
    return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3);
}

std::string stochastic_violation(const StochasticMatrix &m, double tol) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        return "stochastic matrix must be square and non-empty";
    }
    if (m.minCoeff() < -tol) {
        return "stochastic matrix has a negative entry";
    }
    for (Eigen::Index c = 0; c < m.cols(); c++) {
        if (std::abs(m.col(c).sum() - 1.0) > tol) {
            return "stochastic matrix column " + std::to_string(c + 1) + " does not sum to 1";
        }
    }
    return {};
}

HermitianCube embed_matrix(const DensityMatrix &rho) {
    std::string why = rho.state_violation();
    if (!why.empty()) {
        throw std::invalid_argument("cannot embed: " + why);
    }
    size_t n = rho.dim();
    HermitianCube cube(n);
    for (size_t i = 0; i < n; i++) {
        auto ii = static_cast<Eigen::Index>(i);
        cube.set_diag(i, rho.entries(ii, ii).real());
        for (size_t j = i + 1; j < n; j++) {
            Complex v = rho.entries(ii, static_cast<Eigen::Index>(j));
            cube.set_pair_re(i, j, kEmbedScale * v.real());
            cube.set_pair_im(i, j, kEmbedScale * v.imag());
        }
    }
    return cube;
}

QuantumPart extract_quantum_part(const HermitianCube &cube) {
    size_t n = cube.levels();
    auto nn = static_cast<Eigen::Index>(n);
    MatrixC m = MatrixC::Zero(nn, nn);
    for (size_t i = 0; i < n; i++) {
        auto ii = static_cast<Eigen::Index>(i);
        m(ii, ii) = cube.diag(i);
        for (size_t j = i + 1; j < n; j++) {
            auto jj = static_cast<Eigen::Index>(j);
            Complex v(cube.pair_re(i, j) / kEmbedScale, cube.pair_im(i, j) / kEmbedScale);
            m(ii, jj) = v;
            m(jj, ii) = std::conj(v);
        }
    }
    QuantumPart part;
    part.matrix = DensityMatrix(std::move(m));
    auto triples = cube.triple_values();
    part.triples.assign(triples.begin(), triples.end());
    part.positive = part.matrix.is_valid_state();
    return part;
}

HermitianCube embed_bloch(const BlochVector &v) {
    double r = v.norm();
    if (!(r <= 1.0 + kStateTol)) {
        throw std::invalid_argument("Bloch vector length " + fmt(r) + " exceeds 1");
    }
    HermitianCube cube(2);
    cube.set_diag(0, (1.0 + v.x3) / 2.0);
    cube.set_diag(1, (1.0 - v.x3) / 2.0);
    cube.set_pair_re(0, 1, v.x1 * kBlochScale);
    cube.set_pair_im(0, 1, v.x2 * kBlochScale);
    return cube;
}

BlochVector bloch_of(const HermitianCube &cube) {
    if (cube.levels() != 2) {
        throw std::invalid_argument("bloch_of needs a 2-level cube");
    }
    return BlochVector{cube.pair_re(0, 1) / kBlochScale, cube.pair_im(0, 1) / kBlochScale,
                       cube.diag(0) - cube.diag(1)};
}

HermitianCube pauli_cube(int a) {
    HermitianCube cube(2);
    switch (a) {
        case 0:
            cube.set_diag(0, 1);
            cube.set_diag(1, 1);
            break;
        case 1:
            cube.set_pair_re(0, 1, kEmbedScale);
            break;
        case 2:
            cube.set_pair_im(0, 1, kEmbedScale);
            break;
        case 3:
            cube.set_diag(0, 1);
            cube.set_diag(1, -1);
            break;
        default:
            throw std::invalid_argument("Pauli cube index must be 0..3");
    }
    return cube;
}

QuantumLudersResult quantum_luders(const DensityMatrix &rho, std::span<const size_t> block) {
    if (block.empty()) {
        throw std::invalid_argument("Lüders block is empty");
    }
    auto n = static_cast<Eigen::Index>(rho.dim());
    MatrixC projector = MatrixC::Zero(n, n);
    for (size_t k : block) {
        if (k >= rho.dim()) {
            throw std::invalid_argument("Lüders block index out of range");
        }
        projector(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = 1.0;
    }
    QuantumLudersResult result;
    result.probability = std::max(0.0, (projector * rho.entries).trace().real());
    if (result.probability > kStateTol) {
        result.post = DensityMatrix(projector * rho.entries * projector / result.probability);
    }
    return result;
}

UnitaryMatrix dft_unitary(size_t dim) {
    if (dim < 2) {
        throw std::invalid_argument("dft_unitary needs N >= 2");
    }
    auto n = static_cast<Eigen::Index>(dim);
    MatrixC u(n, n);
    double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (Eigen::Index j = 0; j < n; j++) {
        for (Eigen::Index k = 0; k < n; k++) {
            // Reduce jk mod N first so the angle stays exact for small N.
            double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
            u(j, k) = std::polar(scale, angle);
        }
    }
    return UnitaryMatrix(std::move(u));
}

UnitaryMatrix random_unitary(size_t dim, Rng &rng) {
    MatrixC g = ginibre(dim, rng);
    Eigen::HouseholderQR<MatrixC> qr(g);
    MatrixC q = qr.householderQ();
    MatrixC r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index c = 0; c < q.cols(); c++) {
        Complex d = r(c, c);
        double mag = std::abs(d);
        if (mag > 0) {
            q.col(c) *= d / mag;
        }
    }
    return UnitaryMatrix(std::move(q));
}

PureStateVector random_pure_state(size_t dim, Rng &rng) {
    auto n = static_cast<Eigen::Index>(dim);
    VectorC v(n);
    for (Eigen::Index i = 0; i < n; i++) {
        v(i) = Complex(rng.normal(), rng.normal());
    }
    v.normalize();
    return PureStateVector(std::move(v));
}

DensityMatrix random_density_matrix(size_t dim, Rng &rng) {
    MatrixC g = ginibre(dim, rng);
    MatrixC m = g * g.adjoint();
    m /= m.trace().real();
    // Symmetrize away rounding so the Hermiticity check is exact.
    m = (m + m.adjoint()).eval() / 2.0;
    return DensityMatrix(std::move(m));
}

std::vector<double> random_probability_vector(size_t dim, Rng &rng) {
    std::vector<double> p(dim);
    double total = 0;
    for (double &x : p) {
        x = -std::log(1.0 - rng.uniform());
        total += x;
    }
    for (double &x : p) {
        x /= total;
    }
    return p;
}

StochasticMatrix random_stochastic_matrix(size_t dim, Rng &rng) {
    auto n = static_cast<Eigen::Index>(dim);
    StochasticMatrix m(n, n);
    for (Eigen::Index c = 0; c < n; c++) {
        auto col = random_probability_vector(dim, rng);
        for (Eigen::Index r = 0; r < n; r++) {
            m(r, c) = col[static_cast<size_t>(r)];
        }
    }
    return m;
}

}  // namespace dcube
