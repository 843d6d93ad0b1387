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

#ifndef DCUBE_STATES_H
#define DCUBE_STATES_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcube/cube.h"
#include "dcube/quantum.h"

namespace dcube {

/// omega = exp(2 pi i / 3).
Complex omega();

/// A set of normalized, mutually orthogonal cubes.
struct CubeBasis {
    size_t levels = 0;
    std::vector<HermitianCube> members;

    /// Largest |inner(b_i, b_j) - delta_ij| over all pairs.
    double orthonormality_defect() const;
};

/// e_1 ... e_N.
CubeBasis standard_basis(size_t levels);

/// The three-level non-quantum basis rho_1, rho_2, rho_3. Each has diagonal
/// 1/2 on the two levels other than n, and rho_123 = 1/(2 sqrt 3) times
/// 1, omega, omega^* respectively.
CubeBasis nonquantum_basis();

/// The cube rho^(n)(psi) built from a normalized qutrit state and n in {1, 2, 3}:
///   rho_iij = -Re(c_i^* c_j) / sqrt 6,  rho_ijj = -Im(c_i^* c_j) / sqrt 6  (i < j)
///   rho_iii = (1 - |c_i|^2) / 2,        rho_123 = omega^n / (2 sqrt 3)
/// Throws std::invalid_argument for dim != 3 or n outside {1, 2, 3}.
HermitianCube rho_n_of_psi(const PureStateVector &psi, int n);

/// Closed-form overlap (rho^(n)(psi), rho^(m)(phi)) =
/// (1 + |<psi|phi>|^2) / 4 + cos(2 pi (n - m) / 3) / 2.
double family_overlap(const PureStateVector &psi, int n, const PureStateVector &phi, int m);

/// A state resolved from the registry.
struct NamedState {
    std::string name;
    HermitianCube cube;
};

/// Resolves a registry name or a cube JSON file path:
///   "e1".."eN"          standard basis cube (N = 3 unless given as "e<k>@<N>")
///   "rho1".."rho3"      non-quantum basis
///   "rho_n(psi=...,n=k)" family member; psi written as an optional scalar
///                       prefix and a parenthesized complex list, e.g.
///                       "1/√3(1,1,1)", "(0.6,0.8i,0)", "1/sqrt(2)(1,-i,0)"
///   "*.json"            cube file
/// Throws std::invalid_argument with a diagnostic on anything else.
NamedState resolve_state(std::string_view spec);

/// Parses just the psi part of a rho_n spec, e.g. "1/√3(1,1,1)". Not normalized.
VectorC parse_amplitudes(std::string_view text);

/// Registry names that resolve without parameters.
std::vector<std::string> registry_names();

}  // namespace dcube

#endif
