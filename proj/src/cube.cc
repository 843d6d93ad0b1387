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

#include "dcube/cube.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dcube {

namespace {

size_t choose2(size_t n) {
    return n < 2 ? 0 : n * (n - 1) / 2;
}

size_t choose3(size_t n) {
    return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
}

void require_same_levels(const HermitianCube &a, const HermitianCube &b) {
    if (a.levels() != b.levels()) {
        throw std::invalid_argument(
            "cube level mismatch: " + std::to_string(a.levels()) + " vs " + std::to_string(b.levels()));
    }
}

}  // namespace

Complex contract(const Tensor3 &a, const Tensor3 &b) {
    if (a.levels_ != b.levels_) {
        throw std::invalid_argument("tensor level mismatch");
    }
    Complex total = 0;
    for (size_t n = 0; n < a.data_.size(); n++) {
        total += std::conj(a.data_[n]) * b.data_[n];
    }
    return total;
}

double distance(const Tensor3 &a, const Tensor3 &b) {
    if (a.levels_ != b.levels_) {
        throw std::invalid_argument("tensor level mismatch");
    }
    double total = 0;
    for (size_t n = 0; n < a.data_.size(); n++) {
        total += std::norm(a.data_[n] - b.data_[n]);
    }
    return std::sqrt(total);
}

HermitianCube::HermitianCube(size_t levels)
    : levels_(levels),
      diag_(levels),
      pair_re_(choose2(levels)),
      pair_im_(choose2(levels)),
      triple_(choose3(levels)) {
    if (levels < 2) {
        throw std::invalid_argument("a cube needs at least 2 levels, got " + std::to_string(levels));
    }
}

HermitianCube HermitianCube::basis(size_t levels, size_t n) {
    HermitianCube result(levels);
    result.set_diag(n, 1.0);
    return result;
}

size_t HermitianCube::pair_index(size_t i, size_t j) const {
    if (!(i < j && j < levels_)) {
        throw std::out_of_range("pair index requires i < j < levels");
    }
    return i * levels_ - i * (i + 1) / 2 + (j - i - 1);
}

size_t HermitianCube::triple_index(size_t i, size_t j, size_t k) const {
    if (!(i < j && j < k && k < levels_)) {
        throw std::out_of_range("triple index requires i < j < k < levels");
    }
    size_t n = levels_;
    return (choose3(n) - choose3(n - i)) + (choose2(n - i - 1) - choose2(n - j)) + (k - j - 1);
}

double HermitianCube::diag(size_t i) const {
    return diag_.at(i);
}
double HermitianCube::pair_re(size_t i, size_t j) const {
    return pair_re_[pair_index(i, j)];
}
double HermitianCube::pair_im(size_t i, size_t j) const {
    return pair_im_[pair_index(i, j)];
}
Complex HermitianCube::triple(size_t i, size_t j, size_t k) const {
    return triple_[triple_index(i, j, k)];
}

void HermitianCube::set_diag(size_t i, double v) {
    diag_.at(i) = v;
}
void HermitianCube::set_pair_re(size_t i, size_t j, double v) {
    pair_re_[pair_index(i, j)] = v;
}
void HermitianCube::set_pair_im(size_t i, size_t j, double v) {
    pair_im_[pair_index(i, j)] = v;
}
void HermitianCube::set_triple(size_t i, size_t j, size_t k, Complex v) {
    triple_[triple_index(i, j, k)] = v;
}

Complex HermitianCube::element(size_t i, size_t j, size_t k) const {
    if (i >= levels_ || j >= levels_ || k >= levels_) {
        throw std::out_of_range("cube index out of range");
    }
    if (i == j && j == k) {
        return diag_[i];
    }
    if (i == j || j == k || i == k) {
        // Two equal indices: a is the repeated one, b the odd one out.
        size_t a = (i == j || i == k) ? i : j;
        size_t b = (i == j) ? k : (i == k ? j : i);
        return a < b ? pair_re(a, b) : pair_im(b, a);
    }
    std::array<size_t, 3> idx{i, j, k};
    // Parity of the sorting permutation: count inversions.
    int inversions = (i > j) + (i > k) + (j > k);
    std::sort(idx.begin(), idx.end());
    Complex z = triple(idx[0], idx[1], idx[2]);
    return inversions % 2 == 0 ? z : std::conj(z);
}

size_t HermitianCube::independent_reals() const {
    return diag_.size() + pair_re_.size() + pair_im_.size() + 2 * triple_.size();
}

double HermitianCube::trace() const {
    double total = 0;
    for (double d : diag_) {
        total += d;
    }
    return total;
}

std::string HermitianCube::state_violation(double tol) const {
    auto finite = [](double v) {
        return std::isfinite(v);
    };
    bool all_finite = std::all_of(diag_.begin(), diag_.end(), finite) &&
                      std::all_of(pair_re_.begin(), pair_re_.end(), finite) &&
                      std::all_of(pair_im_.begin(), pair_im_.end(), finite) &&
                      std::all_of(triple_.begin(), triple_.end(), [](Complex z) {
                          return std::isfinite(z.real()) && std::isfinite(z.imag());
                      });
    if (!all_finite) {
        return "cube has a non-finite element";
    }
    std::ostringstream out;
    out.precision(17);
    double tr = trace();
    if (std::abs(tr - 1.0) > tol) {
        out << "diagonal sums to " << tr << ", expected 1";
        return out.str();
    }
    for (size_t i = 0; i < levels_; i++) {
        if (diag_[i] < -tol) {
            out << "diagonal element " << (i + 1) << " is negative (" << diag_[i] << ")";
            return out.str();
        }
    }
    return {};
}

bool HermitianCube::is_normalized_state(double tol) const {
    return state_violation(tol).empty();
}

HermitianCube &HermitianCube::operator+=(const HermitianCube &other) {
    require_same_levels(*this, other);
    for (size_t n = 0; n < diag_.size(); n++) {
        diag_[n] += other.diag_[n];
    }
    for (size_t n = 0; n < pair_re_.size(); n++) {
        pair_re_[n] += other.pair_re_[n];
        pair_im_[n] += other.pair_im_[n];
    }
    for (size_t n = 0; n < triple_.size(); n++) {
        triple_[n] += other.triple_[n];
    }
    return *this;
}

HermitianCube &HermitianCube::operator*=(double s) {
    for (double &d : diag_) {
        d *= s;
    }
    for (size_t n = 0; n < pair_re_.size(); n++) {
        pair_re_[n] *= s;
        pair_im_[n] *= s;
    }
    for (Complex &z : triple_) {
        z *= s;
    }
    return *this;
}

Tensor3 expand_full(const HermitianCube &cube) {
    size_t n = cube.levels();
    Tensor3 out(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            for (size_t k = 0; k < n; k++) {
                out(i, j, k) = cube.element(i, j, k);
            }
        }
    }
    return out;
}

HermitianCube compress(const Tensor3 &tensor) {
    size_t n = tensor.levels();
    HermitianCube out(n);
    for (size_t i = 0; i < n; i++) {
        out.set_diag(i, tensor(i, i, i).real());
        for (size_t j = i + 1; j < n; j++) {
            out.set_pair_re(i, j, tensor(i, i, j).real());
            out.set_pair_im(i, j, tensor(i, j, j).real());
            for (size_t k = j + 1; k < n; k++) {
                out.set_triple(i, j, k, tensor(i, j, k));
            }
        }
    }
    return out;
}

double hermiticity_defect(const Tensor3 &t) {
    size_t n = t.levels();
    double worst = 0;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            for (size_t k = 0; k < n; k++) {
                Complex v = t(i, j, k);
                // Transpositions conjugate; a cyclic shift is two transpositions.
                worst = std::max(worst, std::abs(v - std::conj(t(j, i, k))));
                worst = std::max(worst, std::abs(v - std::conj(t(i, k, j))));
                worst = std::max(worst, std::abs(v - std::conj(t(k, j, i))));
                worst = std::max(worst, std::abs(v - t(j, k, i)));
            }
        }
    }
    return worst;
}

double inner(const HermitianCube &rho, const HermitianCube &sigma) {
    require_same_levels(rho, sigma);
    size_t n = rho.levels();
    Complex total = 0;
    double magnitude = 0;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            for (size_t k = 0; k < n; k++) {
                Complex term = std::conj(rho.element(i, j, k)) * sigma.element(i, j, k);
                total += term;
                magnitude += std::abs(term);
            }
        }
    }
    if (std::abs(total.imag()) > kAlgebraTol * std::max(1.0, magnitude)) {
        throw std::logic_error("cube inner product has imaginary residue " + std::to_string(total.imag()));
    }
    return total.real();
}

HermitianCube mix(std::span<const std::pair<double, HermitianCube>> components) {
    if (components.empty()) {
        throw std::invalid_argument("mix needs at least one component");
    }
    double weight_sum = 0;
    for (const auto &[w, cube] : components) {
        if (w < 0) {
            throw std::invalid_argument("mix weight is negative: " + std::to_string(w));
        }
        std::string why = cube.state_violation();
        if (!why.empty()) {
            throw std::invalid_argument("mix component is not a normalized state: " + why);
        }
        require_same_levels(components.front().second, cube);
        weight_sum += w;
    }
    if (std::abs(weight_sum - 1.0) > kStateTol) {
        throw std::invalid_argument("mix weights sum to " + std::to_string(weight_sum) + ", expected 1");
    }
    HermitianCube out(components.front().second.levels());
    for (const auto &[w, cube] : components) {
        out += w * cube;
    }
    return out;
}

HermitianCube mix(std::initializer_list<std::pair<double, HermitianCube>> components) {
    return mix(std::span<const std::pair<double, HermitianCube>>(components.begin(), components.size()));
}

size_t parameter_count(size_t levels) {
    if (levels < 2) {
        throw std::invalid_argument("parameter_count needs N >= 2");
    }
    return levels * levels - 1 + 2 * choose3(levels);
}

bool pairwise_positivity(const HermitianCube &rho, const HermitianCube &sigma, double tol) {
    return inner(rho, sigma) >= -tol;
}

}  // namespace dcube
