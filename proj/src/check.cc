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

#include "dcube/check.h"

#include <cmath>
#include <functional>

#include "dcube/experiments.h"
#include "dcube/measurement.h"
#include "dcube/quantum.h"
#include "dcube/states.h"

namespace dcube {

namespace {

using Measure = std::function<double()>;

/// A check passes when |measure() - expected| <= tolerance.
InvariantCheck evaluate(const std::string &name, double expected, double tolerance, const Measure &measure) {
    InvariantCheck check{name, false, 0, tolerance, {}};
    try {
        check.value = measure();
        double deviation = std::abs(check.value - expected);
        check.passed = deviation <= tolerance;
        if (!check.passed) {
            check.detail = "deviation " + std::to_string(deviation) + " exceeds tolerance";
        }
    } catch (const std::exception &e) {
        check.value = NAN;
        check.detail = e.what();
    }
    return check;
}

/// Random three-level Hermitian cube inside the E-subspace (not necessarily a state).
HermitianCube random_span_cube(Rng &rng) {
    HermitianCube c(3);
    for (size_t i = 0; i < 3; i++) {
        c.set_diag(i, rng.normal());
    }
    c.set_triple(0, 1, 2, Complex(rng.normal(), rng.normal()));
    return c;
}

}  // namespace

std::vector<InvariantCheck> run_invariant_suite(const CheckOptions &options) {
    const TransformT &t = options.transform;
    const size_t trials = options.trials;
    std::vector<InvariantCheck> out;

    out.push_back(evaluate("nonquantum_basis_orthonormality", 0, kAlgebraTol, [] {
        return nonquantum_basis().orthonormality_defect();
    }));
    out.push_back(evaluate("standard_basis_orthonormality", 0, kAlgebraTol, [] {
        return standard_basis(3).orthonormality_defect();
    }));
    out.push_back(evaluate("subspace_basis_orthonormality", 0, kAlgebraTol, [] {
        const auto &e = subspace_basis();
        double worst = 0;
        for (size_t a = 0; a < 5; a++) {
            for (size_t b = 0; b < 5; b++) {
                worst = std::max(worst, std::abs(contract(e[a], e[b]) - (a == b ? 1.0 : 0.0)));
            }
        }
        return worst;
    }));
    out.push_back(evaluate("transform_unitarity", 0, kAlgebraTol, [&] {
        return t.unitarity_defect();
    }));
    out.push_back(evaluate("transform_involution", 0, kAlgebraTol, [&] {
        return t.involution_defect();
    }));
    out.push_back(evaluate("transform_maps_standard_to_nonquantum_basis", 0, kAlgebraTol, [&] {
        return t.basis_map_defect();
    }));
    out.push_back(evaluate("transform_column_constraints", 1, 0, [&] {
        return verify_T_constraints(t.matrix().col(3), t.matrix().col(4)) ? 1.0 : 0.0;
    }));
    out.push_back(evaluate("transform_preserves_hermiticity", 0, kAlgebraTol, [&] {
        return t.hermiticity_defect();
    }));
    out.push_back(evaluate("transform_preserves_inner_product", 0, 1e-10, [&] {
        Rng rng(Rng::derive_seed(options.seed, 1));
        double worst = 0;
        for (size_t n = 0; n < trials; n++) {
            HermitianCube a = random_span_cube(rng);
            HermitianCube b = random_span_cube(rng);
            worst = std::max(worst, std::abs(inner(apply_T(t, a), apply_T(t, b)) - inner(a, b)));
        }
        return worst;
    }));
    out.push_back(evaluate("embedding_isometry", 0, 1e-10, [&] {
        Rng rng(Rng::derive_seed(options.seed, 2));
        double worst = 0;
        for (size_t n = 0; n < trials; n++) {
            DensityMatrix a = random_density_matrix(3, rng);
            DensityMatrix b = random_density_matrix(3, rng);
            double quantum = (a.entries.adjoint() * b.entries).trace().real();
            worst = std::max(worst, std::abs(quantum - inner(embed_matrix(a), embed_matrix(b))));
        }
        return worst;
    }));
    out.push_back(evaluate("family_overlap_formula", 0, 1e-10, [&] {
        Rng rng(Rng::derive_seed(options.seed, 3));
        double worst = 0;
        for (size_t n = 0; n < trials; n++) {
            PureStateVector psi = random_pure_state(3, rng);
            PureStateVector phi = random_pure_state(3, rng);
            int a = 1 + static_cast<int>(rng.next_u64() % 3);
            int b = 1 + static_cast<int>(rng.next_u64() % 3);
            double contracted = inner(rho_n_of_psi(psi, a), rho_n_of_psi(phi, b));
            worst = std::max(worst, std::abs(contracted - family_overlap(psi, a, phi, b)));
        }
        return worst;
    }));
    out.push_back(evaluate("outcome_completeness", 0, kAlgebraTol, [&] {
        Rng rng(Rng::derive_seed(options.seed, 4));
        const BasisPartition partitions[] = {BasisPartition::singletons(3), BasisPartition::parse("1|2,3", 3),
                                             BasisPartition::parse("1,3|2", 3), BasisPartition::parse("1,2,3", 3)};
        double worst = 0;
        for (size_t n = 0; n < trials; n++) {
            HermitianCube state = n % 2 == 0 ? rho_n_of_psi(random_pure_state(3, rng), 1 + static_cast<int>(n % 3))
                                             : embed_matrix(random_density_matrix(3, rng));
            for (const auto &part : partitions) {
                double total = 0;
                for (double p : outcome_probabilities(state, part)) {
                    total += p;
                }
                worst = std::max(worst, std::abs(total - 1.0));
            }
        }
        return worst;
    }));
    out.push_back(evaluate("parameter_count_matches_storage", 0, 0, [] {
        double mismatches = 0;
        for (size_t n = 2; n <= 8; n++) {
            if (parameter_count(n) + 1 != HermitianCube(n).independent_reals()) {
                mismatches += 1;
            }
        }
        return mismatches;
    }));
    out.push_back(evaluate("cube_triple_slit_I123", 0.5, kAlgebraTol, [&] {
        CubeModel model;
        model.transform = t;
        return sorkin_quantity(interference_table(model, 0), 3);
    }));
    out.push_back(evaluate("quantum_third_order_vanishes", 0, 1e-10, [&] {
        return sorkin_sweep(TheoryKind::Quantum, 3, trials, Rng::derive_seed(options.seed, 5)).max_abs_order_k;
    }));
    out.push_back(evaluate("quantum_fourth_order_vanishes", 0, 1e-10, [&] {
        return sorkin_sweep(TheoryKind::Quantum, 4, trials, Rng::derive_seed(options.seed, 6)).max_abs_order_k;
    }));
    out.push_back(evaluate("classical_second_order_vanishes", 0, kAlgebraTol, [&] {
        return sorkin_sweep(TheoryKind::Classical, 2, trials, Rng::derive_seed(options.seed, 7)).max_abs_order_k;
    }));
    out.push_back(evaluate("cube_leggett_garg_K", 3.0, kAlgebraTol, [&] {
        CubeModel model;
        model.transform = t;
        return leggett_garg_run(model).k;
    }));
    out.push_back(evaluate("qutrit_obstruction", 0.5, kAlgebraTol, [&] {
        ObstructionScan scan = qutrit_obstruction_scan(std::max<size_t>(trials, 1), options.seed);
        // Report whichever extreme is farther from 1/2.
        return std::abs(scan.min_pair_overlap - 0.5) > std::abs(scan.max_pair_overlap - 0.5) ? scan.min_pair_overlap
                                                                                               : scan.max_pair_overlap;
    }));
    out.push_back(evaluate("tomography_exact_inversion", 0, kAlgebraTol, [&] {
        double worst = 0;
        for (const auto &rho : nonquantum_basis().members) {
            worst = std::max(worst, std::abs(tomography_exact(rho, t).z - rho.triple(0, 1, 2)));
        }
        return worst;
    }));
    return out;
}

bool all_passed(const std::vector<InvariantCheck> &checks) {
    for (const auto &c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

}  // namespace dcube
