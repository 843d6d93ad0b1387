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

#include "dcube/states.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "dcube/serialize.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace dcube;

namespace {

PureStateVector qutrit(Complex a, Complex b, Complex c) {
    VectorC v(3);
    v << a, b, c;
    return PureStateVector(v);
}

}  // namespace

TEST(States, omega) {
    ASSERT_NEAR(std::abs(omega() - kOmega), 0, 1e-15);
    ASSERT_NEAR(std::abs(omega() * omega() * omega() - 1.0), 0, 1e-15);
}

TEST(States, nonquantum_basis_elements) {
    const auto &rho = nonquantum_basis().members;
    ASSERT_EQ(rho.size(), 3u);
    const double z = 1 / (2 * kSqrt3);
    const Complex phases[] = {1.0, kOmega, std::conj(kOmega)};
    for (size_t n = 0; n < 3; n++) {
        for (size_t i = 0; i < 3; i++) {
            ASSERT_DOUBLE_EQ(rho[n].diag(i), i == n ? 0.0 : 0.5);
            for (size_t j = i + 1; j < 3; j++) {
                ASSERT_EQ(rho[n].pair_re(i, j), 0);
                ASSERT_EQ(rho[n].pair_im(i, j), 0);
            }
        }
        ASSERT_NEAR(std::abs(rho[n].triple(0, 1, 2) - z * phases[n]), 0, 1e-16);
        ASSERT_TRUE(rho[n].is_normalized_state());
    }
}

TEST(States, nonquantum_basis_orthonormal) {
    const auto &rho = nonquantum_basis().members;
    for (size_t a = 0; a < 3; a++) {
        for (size_t b = 0; b < 3; b++) {
            ASSERT_NEAR(inner_by_classes(rho[a], rho[b]), a == b ? 1.0 : 0.0, 1e-12);
        }
    }
    ASSERT_LE(nonquantum_basis().orthonormality_defect(), 1e-12);
    ASSERT_EQ(standard_basis(4).orthonormality_defect(), 0);
    ASSERT_THROW(standard_basis(1), std::invalid_argument);
}

TEST(States, nonquantum_basis_orthogonal_to_standard_partners) {
    // (e_n, rho_n) = 0 and (e_m, rho_n) = 1/2 for m != n.
    const auto &rho = nonquantum_basis().members;
    for (size_t m = 0; m < 3; m++) {
        for (size_t n = 0; n < 3; n++) {
            ASSERT_NEAR(inner(HermitianCube::basis(3, m), rho[n]), m == n ? 0.0 : 0.5, 1e-15);
        }
    }
}

TEST(States, rho_n_of_psi_elements) {
    PureStateVector psi = qutrit(0.6, Complex(0, 0.8), 0);
    for (int n = 1; n <= 3; n++) {
        HermitianCube c = rho_n_of_psi(psi, n);
        for (size_t i = 0; i < 3; i++) {
            ASSERT_NEAR(c.diag(i), (1 - std::norm(psi[i])) / 2, 1e-16);
            for (size_t j = i + 1; j < 3; j++) {
                Complex cc = std::conj(psi[i]) * psi[j];
                ASSERT_NEAR(c.pair_re(i, j), -cc.real() / kSqrt6, 1e-16);
                ASSERT_NEAR(c.pair_im(i, j), -cc.imag() / kSqrt6, 1e-16);
            }
        }
        ASSERT_NEAR(std::abs(c.triple(0, 1, 2) - std::pow(kOmega, n) / (2 * kSqrt3)), 0, 1e-15);
        ASSERT_TRUE(c.is_normalized_state());
    }
}

TEST(States, rho_n_of_basis_vectors_recovers_nonquantum_basis) {
    HermitianCube c = rho_n_of_psi(qutrit(1, 0, 0), 3);
    ASSERT_LT(distance(expand_full(c), expand_full(nonquantum_basis().members[0])), 1e-15);
}

TEST(States, rho_n_of_psi_validation) {
    ASSERT_THROW(rho_n_of_psi(qutrit(1, 0, 0), 0), std::invalid_argument);
    ASSERT_THROW(rho_n_of_psi(qutrit(1, 0, 0), 4), std::invalid_argument);
    VectorC v(2);
    v << 1, 0;
    ASSERT_THROW(rho_n_of_psi(PureStateVector(v), 1), std::invalid_argument);
}

TEST(States, family_overlap_closed_form) {
    Rng rng(31);
    for (int trial = 0; trial < 300; trial++) {
        PureStateVector psi = random_pure_state(3, rng);
        PureStateVector phi = random_pure_state(3, rng);
        int n = 1 + trial % 3, m = 1 + (trial / 3) % 3;
        double by_classes = inner_by_classes(rho_n_of_psi(psi, n), rho_n_of_psi(phi, m));
        double overlap = std::norm(psi.amplitudes().dot(phi.amplitudes()));
        double closed = (1 + overlap) / 4 + std::cos(2 * M_PI * (n - m) / 3) / 2;
        ASSERT_NEAR(by_classes, closed, 1e-12);
        ASSERT_NEAR(family_overlap(psi, n, phi, m), closed, 1e-12);
    }
}

TEST(States, family_members_have_unit_norm) {
    Rng rng(32);
    for (int trial = 0; trial < 50; trial++) {
        HermitianCube c = rho_n_of_psi(random_pure_state(3, rng), 1 + trial % 3);
        ASSERT_NEAR(inner(c, c), 1, 1e-12);
    }
}

TEST(StateRegistry, names) {
    std::vector<std::string> expected{"e1", "e2", "e3", "rho1", "rho2", "rho3"};
    ASSERT_EQ(registry_names(), expected);
    for (const auto &name : expected) {
        NamedState s = resolve_state(name);
        ASSERT_EQ(s.name, name);
        ASSERT_TRUE(s.cube.is_normalized_state());
    }
}

TEST(StateRegistry, basis_with_levels) {
    HermitianCube c = resolve_state("e2@4").cube;
    ASSERT_EQ(c.levels(), 4u);
    ASSERT_EQ(c, HermitianCube::basis(4, 1));
    ASSERT_THROW(resolve_state("e4"), std::invalid_argument);
    ASSERT_THROW(resolve_state("e0"), std::invalid_argument);
    ASSERT_THROW(resolve_state("e5@4"), std::invalid_argument);
}

TEST(StateRegistry, family_spec) {
    HermitianCube c = resolve_state("rho_n(psi=1/√3(1,1,1),n=2)").cube;
    ASSERT_NEAR(std::abs(c.triple(0, 1, 2) - std::conj(kOmega) / (2 * kSqrt3)), 0, 1e-15);
    ASSERT_NEAR(c.diag(0), 1.0 / 3, 1e-15);
    ASSERT_NEAR(c.pair_re(0, 1), -1 / (3 * kSqrt6), 1e-15);

    HermitianCube d = resolve_state("rho_n(psi=1/sqrt(2)(1,-i,0),n=1)").cube;
    // conj(c_1) c_2 = -i/2.
    ASSERT_NEAR(d.pair_re(0, 1), 0, 1e-15);
    ASSERT_NEAR(d.pair_im(0, 1), 0.5 / kSqrt6, 1e-15);
}

TEST(StateRegistry, rejects_bad_specs) {
    for (const char *spec : {"bogus", "rho4", "rho_n(psi=(1,1,1),n=1)", "rho_n(psi=1/√3(1,1,1))",
                             "rho_n(n=1)", "rho_n(psi=1/√3(1,1,1),n=5)", "rho_n(psi=(1,0),n=1)",
                             "missing_file.json"}) {
        ASSERT_THROW(resolve_state(spec), std::invalid_argument) << spec;
    }
}

TEST(StateRegistry, json_file) {
    auto path = std::filesystem::temp_directory_path() / "dcube_states_test_cube.json";
    HermitianCube c = nonquantum_basis().members[1];
    {
        std::ofstream f(path);
        f << cube_to_json(c).dump();
    }
    NamedState s = resolve_state(path.string());
    std::filesystem::remove(path);
    ASSERT_EQ(s.cube, c);
}

TEST(Amplitudes, parse) {
    VectorC a = parse_amplitudes("1/√3(1,1,1)");
    ASSERT_EQ(a.size(), 3);
    for (int i = 0; i < 3; i++) {
        ASSERT_NEAR(std::abs(a(i) - 1 / kSqrt3), 0, 1e-16);
    }
    VectorC b = parse_amplitudes("(0.6,0.8i,0)");
    ASSERT_EQ(b(0), Complex(0.6));
    ASSERT_EQ(b(1), Complex(0, 0.8));
    ASSERT_EQ(b(2), Complex(0));
    VectorC c = parse_amplitudes("1/sqrt(2)(1,-i,0)");
    ASSERT_NEAR(std::abs(c(1) - Complex(0, -1 / kSqrt2)), 0, 1e-16);
    VectorC d = parse_amplitudes("(1+2i, -3.5-i, i)");
    ASSERT_EQ(d(0), Complex(1, 2));
    ASSERT_EQ(d(1), Complex(-3.5, -1));
    ASSERT_EQ(d(2), Complex(0, 1));
    VectorC e = parse_amplitudes("0.5(1,1)");
    ASSERT_EQ(e(0), Complex(0.5));
}

TEST(Amplitudes, parse_errors) {
    for (const char *text : {"", "(", "(1,", "(1,,2)", "1/(1,1)", "(1,2)x", "(1+)"}) {
        ASSERT_THROW(parse_amplitudes(text), std::invalid_argument) << text;
    }
}

TEST(States, family_pairwise_positivity) {
    Rng rng(33);
    for (int trial = 0; trial < 1000; trial++) {
        HermitianCube a = rho_n_of_psi(random_pure_state(3, rng), 1 + trial % 3);
        HermitianCube b = rho_n_of_psi(random_pure_state(3, rng), 1 + (trial / 3) % 3);
        HermitianCube q = embed_matrix(random_density_matrix(3, rng));
        ASSERT_TRUE(pairwise_positivity(a, b));
        ASSERT_TRUE(pairwise_positivity(a, q));
        ASSERT_TRUE(pairwise_positivity(q, a));
    }
}

TEST(States, family_has_at_most_three_mutually_orthogonal_members) {
    // Candidates draw psi from the columns of a random unitary (plus one free
    // state) so that orthogonal pairs actually occur.
    Rng rng(34);
    size_t triples_found = 0;
    for (int trial = 0; trial < 10000; trial++) {
        UnitaryMatrix u = random_unitary(3, rng);
        std::vector<HermitianCube> members;
        for (int m = 0; m < 4; m++) {
            VectorC psi = m < 3 ? VectorC(u.entries().col(m)) : random_pure_state(3, rng).amplitudes();
            if (m == 3 && rng.uniform() < 0.5) {
                psi = u.entries().col(static_cast<Eigen::Index>(rng.next_u64() % 3));
            }
            members.push_back(rho_n_of_psi(PureStateVector(psi), 1 + static_cast<int>(rng.next_u64() % 3)));
        }
        auto orthogonal = [&](size_t a, size_t b) {
            return std::abs(inner(members[a], members[b])) < 1e-10;
        };
        bool first_three = orthogonal(0, 1) && orthogonal(0, 2) && orthogonal(1, 2);
        triples_found += first_three;
        ASSERT_FALSE(first_three && orthogonal(0, 3) && orthogonal(1, 3) && orthogonal(2, 3));
    }
    ASSERT_GT(triples_found, 0u);
}
