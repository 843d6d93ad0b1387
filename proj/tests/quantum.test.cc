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

#include "gtest/gtest.h"
#include "test_util.h"

using namespace dcube;

namespace {

DensityMatrix example_qutrit() {
    MatrixC m(3, 3);
    m << 0.5, Complex(0.1, 0.2), Complex(0, -0.1),  //
        Complex(0.1, -0.2), 0.3, 0.05,               //
        Complex(0, 0.1), 0.05, 0.2;
    return DensityMatrix(m);
}

}  // namespace

TEST(DensityMatrix, validity) {
    ASSERT_TRUE(example_qutrit().is_valid_state());
    ASSERT_TRUE(DensityMatrix::maximally_mixed(4).is_valid_state());

    MatrixC nonherm = example_qutrit().entries;
    nonherm(0, 1) += 0.1;
    ASSERT_FALSE(DensityMatrix(nonherm).is_valid_state());

    MatrixC trace = example_qutrit().entries;
    trace(2, 2) += 0.1;
    ASSERT_FALSE(DensityMatrix(trace).is_valid_state());

    MatrixC negative = MatrixC::Zero(2, 2);
    negative << 1.5, 0, 0, -0.5;
    ASSERT_FALSE(DensityMatrix(negative).is_valid_state());
    ASSERT_NEAR(DensityMatrix(negative).min_eigenvalue(), -0.5, 1e-14);
}

TEST(DensityMatrix, pure) {
    VectorC psi(2);
    psi << 1 / kSqrt2, Complex(0, 1 / kSqrt2);
    DensityMatrix rho = DensityMatrix::pure(psi);
    ASSERT_NEAR(std::abs(rho.entries(0, 1) - Complex(0, -0.5)), 0, 1e-15);
    ASSERT_TRUE(rho.is_valid_state());
}

TEST(PureStateVector, normalization) {
    VectorC ok(2);
    ok << 0.6, Complex(0, 0.8);
    ASSERT_NO_THROW(PureStateVector{ok});
    VectorC bad(2);
    bad << 1, 1;
    ASSERT_THROW(PureStateVector{bad}, std::invalid_argument);
    ASSERT_THROW(PureStateVector{VectorC()}, std::invalid_argument);
}

TEST(UnitaryMatrix, validation) {
    ASSERT_NO_THROW(UnitaryMatrix(MatrixC::Identity(3, 3)));
    MatrixC m = MatrixC::Identity(3, 3);
    m(0, 1) = 1e-3;
    ASSERT_THROW(UnitaryMatrix{m}, std::invalid_argument);
    ASSERT_NEAR(UnitaryMatrix::unitarity_defect(m), 1e-3, 1e-12);
}

TEST(Stochastic, violation) {
    MatrixR ok(2, 2);
    ok << 0.3, 1, 0.7, 0;
    ASSERT_TRUE(stochastic_violation(ok).empty());
    MatrixR sum(2, 2);
    sum << 0.3, 1, 0.6, 0;
    ASSERT_FALSE(stochastic_violation(sum).empty());
    MatrixR neg(2, 2);
    neg << 1.2, 1, -0.2, 0;
    ASSERT_FALSE(stochastic_violation(neg).empty());
}

TEST(Embedding, elements) {
    DensityMatrix rho = example_qutrit();
    HermitianCube c = embed_matrix(rho);
    const double s = std::sqrt(2.0 / 3.0);
    for (size_t i = 0; i < 3; i++) {
        ASSERT_DOUBLE_EQ(c.diag(i), rho.entries(i, i).real());
        for (size_t j = i + 1; j < 3; j++) {
            ASSERT_NEAR(c.pair_re(i, j), s * rho.entries(i, j).real(), 1e-16);
            ASSERT_NEAR(c.pair_im(i, j), s * rho.entries(i, j).imag(), 1e-16);
        }
    }
    ASSERT_EQ(c.triple(0, 1, 2), Complex(0));
    ASSERT_TRUE(c.is_normalized_state());
}

TEST(Embedding, rejects_invalid_state) {
    MatrixC m = example_qutrit().entries;
    m(0, 0) = 2;
    ASSERT_THROW(embed_matrix(DensityMatrix(m)), std::invalid_argument);
}

TEST(Embedding, isometry_property) {
    Rng rng(21);
    for (size_t n = 2; n <= 4; n++) {
        for (int trial = 0; trial < 200; trial++) {
            DensityMatrix a = random_density_matrix(n, rng);
            DensityMatrix b = random_density_matrix(n, rng);
            double trace = (a.entries.adjoint() * b.entries).trace().real();
            HermitianCube ea = embed_matrix(a), eb = embed_matrix(b);
            ASSERT_NEAR(inner(ea, eb), trace, 1e-12);
            ASSERT_NEAR(inner_by_classes(ea, eb), trace, 1e-12);
        }
    }
}

TEST(Embedding, round_trip) {
    Rng rng(22);
    for (int trial = 0; trial < 200; trial++) {
        DensityMatrix rho = random_density_matrix(3, rng);
        QuantumPart q = extract_quantum_part(embed_matrix(rho));
        ASSERT_LT((q.matrix.entries - rho.entries).cwiseAbs().maxCoeff(), 1e-15);
        ASSERT_TRUE(q.positive);
        ASSERT_EQ(q.triples.size(), 1u);
        ASSERT_EQ(q.triples[0], Complex(0));
    }
}

TEST(Embedding, extract_keeps_triples_and_flags_nonpositive) {
    HermitianCube c(3);
    c.set_diag(0, 1);
    c.set_pair_re(0, 1, 0.5);
    c.set_triple(0, 1, 2, Complex(0.1, 0.2));
    QuantumPart q = extract_quantum_part(c);
    ASSERT_EQ(q.triples[0], Complex(0.1, 0.2));
    ASSERT_FALSE(q.positive);
}

TEST(Bloch, elements_and_round_trip) {
    BlochVector v{0.3, -0.4, 0.5};
    HermitianCube c = embed_bloch(v);
    ASSERT_DOUBLE_EQ(c.diag(0), 0.75);
    ASSERT_DOUBLE_EQ(c.diag(1), 0.25);
    ASSERT_NEAR(c.pair_re(0, 1), 0.3 / kSqrt6, 1e-16);
    ASSERT_NEAR(c.pair_im(0, 1), -0.4 / kSqrt6, 1e-16);
    BlochVector back = bloch_of(c);
    ASSERT_NEAR(back.x1, 0.3, 1e-15);
    ASSERT_NEAR(back.x2, -0.4, 1e-15);
    ASSERT_NEAR(back.x3, 0.5, 1e-15);
    ASSERT_THROW(embed_bloch({1, 1, 0}), std::invalid_argument);
    ASSERT_THROW(bloch_of(HermitianCube(3)), std::invalid_argument);
}

TEST(Bloch, agrees_with_matrix_embedding) {
    BlochVector v{0.6, 0.0, -0.8};
    MatrixC m(2, 2);
    m << (1 + v.x3) / 2, Complex(v.x1, -v.x2) / 2.0, Complex(v.x1, v.x2) / 2.0, (1 - v.x3) / 2;
    HermitianCube from_matrix = embed_matrix(DensityMatrix(m));
    HermitianCube from_bloch = embed_bloch(v);
    ASSERT_NEAR(from_matrix.pair_re(0, 1), from_bloch.pair_re(0, 1), 1e-15);
    ASSERT_NEAR(from_matrix.pair_im(0, 1), from_bloch.pair_im(0, 1), 1e-15);
    ASSERT_NEAR(from_matrix.diag(0), from_bloch.diag(0), 1e-15);
}

TEST(Bloch, pauli_cubes_orthogonal) {
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            ASSERT_NEAR(inner(pauli_cube(a), pauli_cube(b)), a == b ? 2.0 : 0.0, 1e-15);
        }
    }
    ASSERT_THROW(pauli_cube(4), std::invalid_argument);
}

TEST(Bloch, state_overlap_formula) {
    // (rho_x, rho_y) = (1 + x . y) / 2 for qubit states.
    Rng rng(23);
    for (int trial = 0; trial < 100; trial++) {
        BlochVector x{rng.normal(), rng.normal(), rng.normal()};
        BlochVector y{rng.normal(), rng.normal(), rng.normal()};
        double nx = x.norm() * (1 + rng.uniform()), ny = y.norm() * (1 + rng.uniform());
        x = {x.x1 / nx, x.x2 / nx, x.x3 / nx};
        y = {y.x1 / ny, y.x2 / ny, y.x3 / ny};
        double dot = x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3;
        ASSERT_NEAR(inner(embed_bloch(x), embed_bloch(y)), (1 + dot) / 2, 1e-14);
    }
}

TEST(QuantumLuders, projection) {
    DensityMatrix rho = example_qutrit();
    std::vector<size_t> block{0, 2};
    QuantumLudersResult r = quantum_luders(rho, block);
    ASSERT_NEAR(r.probability, 0.7, 1e-15);
    ASSERT_FALSE(r.absorbed());
    MatrixC p = MatrixC::Zero(3, 3);
    p(0, 0) = p(2, 2) = 1;
    MatrixC expected = p * rho.entries * p / 0.7;
    ASSERT_LT((r.post->entries - expected).cwiseAbs().maxCoeff(), 1e-15);
    ASSERT_TRUE(r.post->is_valid_state());

    DensityMatrix e1 = DensityMatrix::pure(VectorC::Unit(3, 0));
    std::vector<size_t> other{1};
    ASSERT_TRUE(quantum_luders(e1, other).absorbed());
    ASSERT_THROW(quantum_luders(e1, std::vector<size_t>{}), std::invalid_argument);
    ASSERT_THROW(quantum_luders(e1, std::vector<size_t>{3}), std::invalid_argument);
}

TEST(Dft, entries) {
    UnitaryMatrix u = dft_unitary(3);
    for (size_t j = 0; j < 3; j++) {
        for (size_t k = 0; k < 3; k++) {
            Complex expected = std::pow(kOmega, static_cast<int>(j * k)) / kSqrt3;
            ASSERT_NEAR(std::abs(u.entries()(j, k) - expected), 0, 1e-15);
        }
    }
    ASSERT_THROW(dft_unitary(1), std::invalid_argument);
}

TEST(Random, generators_produce_valid_objects) {
    Rng rng(24);
    for (size_t n = 2; n <= 5; n++) {
        for (int trial = 0; trial < 50; trial++) {
            ASSERT_LT(UnitaryMatrix::unitarity_defect(random_unitary(n, rng).entries()), 1e-12);
            ASSERT_NEAR(random_pure_state(n, rng).amplitudes().norm(), 1, 1e-12);
            ASSERT_TRUE(random_density_matrix(n, rng).is_valid_state());
            std::vector<double> p = random_probability_vector(n, rng);
            double total = 0;
            for (double x : p) {
                ASSERT_GE(x, 0);
                total += x;
            }
            ASSERT_NEAR(total, 1, 1e-12);
            ASSERT_TRUE(stochastic_violation(random_stochastic_matrix(n, rng)).empty());
        }
    }
}

TEST(Random, haar_first_moment) {
    // E|U_00|^2 = 1/N for Haar unitaries.
    Rng rng(25);
    double total = 0;
    const int n = 20000;
    for (int trial = 0; trial < n; trial++) {
        total += std::norm(random_unitary(3, rng).entries()(0, 0));
    }
    ASSERT_NEAR(total / n, 1.0 / 3, 5e-3);
}

TEST(Bloch, random_round_trip) {
    Rng rng(26);
    for (int trial = 0; trial < 500; trial++) {
        BlochVector v{rng.normal(), rng.normal(), rng.normal()};
        double r = v.norm() / std::cbrt(rng.uniform());
        v = {v.x1 / r, v.x2 / r, v.x3 / r};
        HermitianCube c = embed_bloch(v);
        ASSERT_TRUE(c.is_normalized_state());
        BlochVector back = bloch_of(c);
        ASSERT_NEAR(back.x1, v.x1, 1e-15);
        ASSERT_NEAR(back.x2, v.x2, 1e-15);
        ASSERT_NEAR(back.x3, v.x3, 1e-15);
    }
}

TEST(Dft, columns_orthonormal) {
    for (size_t n = 2; n <= 6; n++) {
        MatrixC u = dft_unitary(n).entries();
        ASSERT_LT((u.adjoint() * u - MatrixC::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-12);
    }
}
