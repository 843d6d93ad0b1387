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

#include "dcube/states.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace dcube;

namespace {

/// Random three-level cube inside the E-subspace (diagonal plus triple element).
HermitianCube random_span_cube(Rng &rng) {
    HermitianCube c(3);
    for (size_t i = 0; i < 3; i++) {
        c.set_diag(i, rng.normal());
    }
    c.set_triple(0, 1, 2, Complex(rng.normal(), rng.normal()));
    return c;
}

Matrix5c written_out_T() {
    Complex w = kOmega, wc = std::conj(kOmega);
    Matrix5c t;
    t << 0, 1, 1, 1, 1,  //
        1, 0, 1, wc, w,  //
        1, 1, 0, w, wc,  //
        1, w, wc, 1, 0,  //
        1, wc, w, 0, 1;
    return 0.5 * t;
}

}  // namespace

TEST(SubspaceBasis, entries) {
    const auto &e = subspace_basis();
    const double s = 1 / kSqrt3;
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = 0; j < 3; j++) {
            for (size_t k = 0; k < 3; k++) {
                for (size_t n = 0; n < 3; n++) {
                    ASSERT_EQ(e[n](i, j, k), Complex(i == n && j == n && k == n ? 1 : 0));
                }
                bool cyclic = (i == 0 && j == 1 && k == 2) || (i == 1 && j == 2 && k == 0) ||
                              (i == 2 && j == 0 && k == 1);
                bool anticyclic = (i == 0 && j == 2 && k == 1) || (i == 2 && j == 1 && k == 0) ||
                                  (i == 1 && j == 0 && k == 2);
                ASSERT_NEAR(e[3](i, j, k).real(), cyclic ? s : 0, 1e-16);
                ASSERT_NEAR(e[4](i, j, k).real(), anticyclic ? s : 0, 1e-16);
            }
        }
    }
    for (size_t a = 0; a < 5; a++) {
        for (size_t b = 0; b < 5; b++) {
            ASSERT_NEAR(std::abs(contract(e[a], e[b]) - (a == b ? 1.0 : 0.0)), 0, 1e-15);
        }
    }
}

TEST(Projection, coordinates) {
    Projection p = project(HermitianCube::basis(3, 1));
    Vector5c e2 = Vector5c::Zero();
    e2(1) = 1;
    ASSERT_LT((p.coefficients.c - e2).cwiseAbs().maxCoeff(), 1e-15);
    ASSERT_EQ(p.residual, 0);

    // rho_2 = (1, 0, 1, w, w*) / 2.
    Projection r = project(nonquantum_basis().members[1]);
    Vector5c expected;
    expected << 1, 0, 1, kOmega, std::conj(kOmega);
    ASSERT_LT((r.coefficients.c - 0.5 * expected).cwiseAbs().maxCoeff(), 1e-15);
    ASSERT_LT(r.residual, 1e-15);
    ASSERT_TRUE(r.coefficients.is_hermitian_representable());
}

TEST(Projection, residual_of_pair_elements) {
    HermitianCube c = HermitianCube::basis(3, 0);
    c.set_pair_re(0, 1, 0.1);
    // Three tensor entries of 0.1 lie outside the subspace.
    ASSERT_NEAR(project(c).residual, 0.1 * kSqrt3, 1e-15);
    ASSERT_THROW(project(HermitianCube(4)), std::invalid_argument);
}

TEST(Projection, reconstruct_round_trip) {
    Rng rng(41);
    for (int trial = 0; trial < 100; trial++) {
        HermitianCube c = random_span_cube(rng);
        HermitianCube back = reconstruct(project(c).coefficients);
        ASSERT_LT(distance(expand_full(back), expand_full(c)), 1e-14);
    }
    CoefficientVector bad;
    bad.c(3) = 1;
    bad.c(4) = 1;
    ASSERT_NO_THROW(reconstruct(bad));
    bad.c(4) = Complex(0, 1);
    ASSERT_THROW(reconstruct(bad), std::invalid_argument);
    CoefficientVector imaginary_diag;
    imaginary_diag.c(0) = Complex(0, 1);
    ASSERT_FALSE(imaginary_diag.is_hermitian_representable());
}

TEST(TransformT, canonical_matrix) {
    ASSERT_LT((TransformT::canonical_matrix() - written_out_T()).cwiseAbs().maxCoeff(), 1e-15);
    TransformT t;
    ASSERT_LT(t.unitarity_defect(), 1e-15);
    ASSERT_LT(t.involution_defect(), 1e-15);
    ASSERT_LT(t.basis_map_defect(), 1e-15);
    ASSERT_LT(t.hermiticity_defect(), 1e-15);
    ASSERT_TRUE(t.violations().empty());
}

TEST(TransformT, hermiticity_commutation_written_out) {
    Matrix5c swap = Matrix5c::Zero();
    swap(0, 0) = swap(1, 1) = swap(2, 2) = 1;
    swap(3, 4) = swap(4, 3) = 1;
    Matrix5c t = written_out_T();
    ASSERT_LT((t * swap - swap * t.conjugate()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(TransformT, perturbation_is_reported) {
    Matrix5c m = TransformT::canonical_matrix();
    m(0, 0) += 1e-3;
    TransformT t(m);
    // (T^+ T)_0j picks up conj(eps) T_0j = eps / 2.
    ASSERT_NEAR(t.unitarity_defect(), 5e-4, 1e-12);
    std::vector<std::string> v = t.violations();
    ASSERT_FALSE(v.empty());
    ASSERT_NE(v[0].find("unitary"), std::string::npos);

    m = TransformT::canonical_matrix();
    m(2, 2) = NAN;
    ASSERT_EQ(TransformT(m).violations().size(), 1u);
}

TEST(TransformT, swapped_columns_are_unitary_but_wrong) {
    Matrix5c m = TransformT::canonical_matrix();
    m.col(3).swap(m.col(4));
    TransformT t(m);
    ASSERT_LT(t.unitarity_defect(), 1e-15);
    ASSERT_GT(t.involution_defect(), 0.1);
    ASSERT_FALSE(t.violations().empty());
}

TEST(ApplyT, maps_standard_basis_to_nonquantum_basis_and_back) {
    TransformT t;
    const auto &rho = nonquantum_basis().members;
    for (size_t n = 0; n < 3; n++) {
        HermitianCube image = apply_T(t, HermitianCube::basis(3, n));
        ASSERT_LT(distance(expand_full(image), expand_full(rho[n])), 1e-15);
        HermitianCube back = apply_T(t, rho[n]);
        ASSERT_LT(distance(expand_full(back), expand_full(HermitianCube::basis(3, n))), 1e-15);
    }
}

TEST(ApplyT, preserves_inner_product_and_is_linear) {
    TransformT t;
    Rng rng(42);
    for (int trial = 0; trial < 200; trial++) {
        HermitianCube a = random_span_cube(rng);
        HermitianCube b = random_span_cube(rng);
        ASSERT_NEAR(inner(apply_T(t, a), apply_T(t, b)), inner_by_classes(a, b), 1e-12);
        HermitianCube sum = apply_T(t, 0.5 * a + b);
        HermitianCube parts = 0.5 * apply_T(t, a) + apply_T(t, b);
        ASSERT_LT(distance(expand_full(sum), expand_full(parts)), 1e-12);
        HermitianCube twice = apply_T(t, apply_T(t, a));
        ASSERT_LT(distance(expand_full(twice), expand_full(a)), 1e-12);
    }
}

TEST(ApplyT, preserves_trace_on_states) {
    TransformT t;
    HermitianCube m = mix({{0.2, nonquantum_basis().members[0]}, {0.8, HermitianCube::basis(3, 2)}});
    HermitianCube image = apply_T(t, m);
    ASSERT_NEAR(image.trace(), 1, 1e-15);
    ASSERT_TRUE(image.is_normalized_state());
}

TEST(ApplyT, rejects_out_of_span) {
    HermitianCube c = HermitianCube::basis(3, 0);
    c.set_pair_im(1, 2, 0.01);
    ASSERT_THROW(apply_T(TransformT(), c), std::domain_error);
}

TEST(ApplyT, transformed_probabilities) {
    TransformT t;
    Rng rng(43);
    for (int trial = 0; trial < 50; trial++) {
        HermitianCube c = random_span_cube(rng);
        HermitianCube image = apply_T(t, c);
        std::array<double, 3> p = transformed_probabilities(t, c);
        for (size_t i = 0; i < 3; i++) {
            ASSERT_NEAR(p[i], image.diag(i), 1e-14);
        }
    }
    // Out of span: the pair elements carry no weight onto the diagonal.
    // mu_1 = (d2 + d3) / 2 + sqrt3 Re z.
    HermitianCube f = rho_n_of_psi(random_pure_state(3, rng), 2);
    std::array<double, 3> p = transformed_probabilities(t, f);
    Complex z = f.triple(0, 1, 2);
    ASSERT_NEAR(p[0], (f.diag(1) + f.diag(2)) / 2 + kSqrt3 * z.real(), 1e-14);
    ASSERT_NEAR(p[0] + p[1] + p[2], 1, 1e-14);
}

TEST(ApplyTOnPaths, agrees_with_apply_T_for_three_levels) {
    TransformT t;
    Rng rng(44);
    for (int trial = 0; trial < 50; trial++) {
        HermitianCube c = random_span_cube(rng);
        HermitianCube a = apply_T(t, c);
        HermitianCube b = apply_T_on_paths(t, c, {0, 1, 2});
        ASSERT_LT(distance(expand_full(a), expand_full(b)), 1e-14);
    }
}

TEST(ApplyTOnPaths, four_levels) {
    TransformT t;
    HermitianCube c = HermitianCube::basis(4, 1);
    HermitianCube image = apply_T_on_paths(t, c, {1, 2, 3});
    // e_1 of the path triple (2, 3, 4) goes to rho_1 on those paths.
    ASSERT_EQ(image.diag(0), 0);
    ASSERT_NEAR(image.diag(1), 0, 1e-15);
    ASSERT_NEAR(image.diag(2), 0.5, 1e-15);
    ASSERT_NEAR(image.diag(3), 0.5, 1e-15);
    ASSERT_NEAR(std::abs(image.triple(1, 2, 3) - 1 / (2 * kSqrt3)), 0, 1e-15);
    ASSERT_EQ(image.triple(0, 1, 2), Complex(0));

    // Reversed path order conjugates the stored triple element.
    HermitianCube mid = apply_T_on_paths(t, HermitianCube::basis(4, 2), {3, 2, 1});
    HermitianCube direct = apply_T_on_paths(t, HermitianCube::basis(4, 2), {1, 2, 3});
    ASSERT_NEAR(mid.diag(1), 0.5, 1e-15);
    ASSERT_NEAR(mid.diag(2), 0, 1e-15);
    ASSERT_NEAR(std::abs(mid.element(3, 2, 1) - direct.element(1, 2, 3)), 0, 1e-15);
}

TEST(ApplyTOnPaths, untouched_elements_and_errors) {
    TransformT t;
    HermitianCube c(4);
    c.set_diag(0, 0.5);
    c.set_diag(1, 0.5);
    c.set_pair_re(0, 1, 0.2);
    c.set_triple(0, 1, 3, Complex(0.1, 0.1));
    HermitianCube image = apply_T_on_paths(t, c, {1, 2, 3});
    ASSERT_EQ(image.diag(0), 0.5);
    ASSERT_EQ(image.pair_re(0, 1), 0);
    ASSERT_EQ(image.triple(0, 1, 3), Complex(0));

    HermitianCube five(5);
    five.set_diag(0, 0.5);
    five.set_diag(2, 0.5);
    five.set_pair_re(2, 3, 0.1);
    five.set_pair_im(3, 4, 0.2);
    five.set_triple(0, 1, 4, Complex(0, 0.1));
    five.set_triple(0, 2, 3, Complex(0.3, 0));
    HermitianCube after = apply_T_on_paths(t, five, {0, 1, 4});
    ASSERT_EQ(after.pair_im(3, 4), 0);
    ASSERT_EQ(after.triple(0, 2, 3), Complex(0));
    ASSERT_EQ(after.diag(2), 0.5);
    ASSERT_EQ(after.pair_re(2, 3), 0.1);
    ASSERT_NEAR(after.trace(), 1, 1e-15);

    ASSERT_THROW(apply_T_on_paths(t, c, {0, 1, 2}), std::domain_error);
    ASSERT_THROW(apply_T_on_paths(t, c, {1, 1, 2}), std::invalid_argument);
    ASSERT_THROW(apply_T_on_paths(t, c, {1, 2, 4}), std::invalid_argument);
}

TEST(VerifyTConstraints, canonical_columns) {
    Matrix5c t = written_out_T();
    ASSERT_TRUE(verify_T_constraints(t.col(3), t.col(4)));
    Vector5c a = t.col(3);
    a(0) += 1e-6;
    ASSERT_FALSE(verify_T_constraints(a, t.col(4)));
    ASSERT_FALSE(verify_T_constraints(t.col(3), t.col(3)));
}

TEST(Obstruction, zero_phase_sample_by_hand) {
    // U = (J - 1) / sqrt2: any two columns share exactly one nonzero row product 1/2.
    ObstructionScan s = qutrit_obstruction_scan(1, 0);
    ASSERT_EQ(s.samples, 1u);
    ASSERT_NEAR(s.min_pair_overlap, 0.5, 1e-15);
    ASSERT_NEAR(s.max_pair_overlap, 0.5, 1e-15);
    ASSERT_NEAR(s.best_sample_deviation, 0.5, 1e-15);
}

TEST(Obstruction, random_phases_never_orthogonal) {
    ObstructionScan s = qutrit_obstruction_scan(2000, 45);
    ASSERT_NEAR(s.min_pair_overlap, 0.5, 1e-12);
    ASSERT_NEAR(s.max_pair_overlap, 0.5, 1e-12);
    ASSERT_THROW(qutrit_obstruction_scan(0, 1), std::invalid_argument);
}
