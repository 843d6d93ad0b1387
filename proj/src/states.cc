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

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dcube/serialize.h"

namespace dcube {

namespace {

const double kTripleMagnitude = 1.0 / (2.0 * std::sqrt(3.0));

HermitianCube nonquantum_member(size_t n, Complex phase) {
    HermitianCube cube(3);
    for (size_t i = 0; i < 3; i++) {
        cube.set_diag(i, i == n ? 0.0 : 0.5);
    }
    cube.set_triple(0, 1, 2, kTripleMagnitude * phase);
    return cube;
}

/// Minimal cursor over a spec string.
class Cursor {
   public:
    explicit Cursor(std::string_view text) : text_(text) {
    }

    bool done() const {
        return pos_ >= text_.size();
    }
    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }
    bool accept(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view token) {
        if (!accept(token)) {
            fail("expected '" + std::string(token) + "'");
        }
    }
    char peek() {
        skip_space();
        return done() ? '\0' : text_[pos_];
    }
    bool at_number() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
    }
    double number() {
        skip_space();
        size_t start = pos_;
        while (!done() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
                           text_[pos_] == 'e' || text_[pos_] == 'E' ||
                           ((text_[pos_] == '-' || text_[pos_] == '+') && pos_ > start &&
                            (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
            pos_++;
        }
        if (start == pos_) {
            fail("expected a number");
        }
        try {
            return std::stod(std::string(text_.substr(start, pos_ - start)));
        } catch (const std::exception &) {
            fail("malformed number");
        }
    }
    [[noreturn]] void fail(const std::string &why) const {
        throw std::invalid_argument("cannot parse '" + std::string(text_) + "' at offset " +
                                    std::to_string(pos_) + ": " + why);
    }
    std::string_view rest() const {
        return text_.substr(pos_);
    }

   private:
    std::string_view text_;
    size_t pos_ = 0;
};

/// number | number "/" (number | "√" number | "sqrt" ["("] number [")"])
double parse_scalar(Cursor &in) {
    double value = in.number();
    if (!in.accept("/")) {
        return value;
    }
    if (in.accept("√")) {
        return value / std::sqrt(in.number());
    }
    if (in.accept("sqrt")) {
        bool paren = in.accept("(");
        double arg = in.number();
        if (paren) {
            in.expect(")");
        }
        return value / std::sqrt(arg);
    }
    return value / in.number();
}

/// One signed term: [+|-] (number ["i"] | "i")
Complex parse_term(Cursor &in, bool require_sign) {
    double sign = 1;
    if (in.accept("-")) {
        sign = -1;
    } else if (!in.accept("+") && require_sign) {
        in.fail("expected '+' or '-'");
    }
    if (in.accept("i")) {
        return Complex(0, sign);
    }
    double v = sign * in.number();
    if (in.accept("i")) {
        return Complex(0, v);
    }
    return Complex(v, 0);
}

Complex parse_complex(Cursor &in) {
    Complex value = parse_term(in, false);
    char c = in.peek();
    if (c == '+' || c == '-') {
        value += parse_term(in, true);
    }
    return value;
}

VectorC parse_amplitude_list(Cursor &in) {
    double scale = 1.0;
    if (in.at_number()) {
        scale = parse_scalar(in);
        in.accept("*");
    }
    in.expect("(");
    std::vector<Complex> values{parse_complex(in)};
    while (in.accept(",")) {
        values.push_back(parse_complex(in));
    }
    in.expect(")");
    VectorC v(static_cast<Eigen::Index>(values.size()));
    for (size_t i = 0; i < values.size(); i++) {
        v(static_cast<Eigen::Index>(i)) = scale * values[i];
    }
    return v;
}

}  // namespace

Complex omega() {
    return std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
}

double CubeBasis::orthonormality_defect() const {
    double worst = 0;
    for (size_t i = 0; i < members.size(); i++) {
        for (size_t j = 0; j < members.size(); j++) {
            double expected = i == j ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(inner(members[i], members[j]) - expected));
        }
    }
    return worst;
}

CubeBasis standard_basis(size_t levels) {
    if (levels < 2) {
        throw std::invalid_argument("standard_basis needs N >= 2");
    }
    CubeBasis basis{levels, {}};
    for (size_t n = 0; n < levels; n++) {
        basis.members.push_back(HermitianCube::basis(levels, n));
    }
    return basis;
}

CubeBasis nonquantum_basis() {
    Complex w = omega();
    return CubeBasis{3, {nonquantum_member(0, 1.0), nonquantum_member(1, w), nonquantum_member(2, std::conj(w))}};
}

HermitianCube rho_n_of_psi(const PureStateVector &psi, int n) {
    if (psi.dim() != 3) {
        throw std::invalid_argument("rho_n(psi) needs a qutrit state, got dimension " + std::to_string(psi.dim()));
    }
    if (n < 1 || n > 3) {
        throw std::invalid_argument("rho_n(psi) needs n in {1, 2, 3}, got " + std::to_string(n));
    }
    const double s = 1.0 / std::sqrt(6.0);
    HermitianCube cube(3);
    for (size_t i = 0; i < 3; i++) {
        cube.set_diag(i, 0.5 * (1.0 - std::norm(psi[i])));
        for (size_t j = i + 1; j < 3; j++) {
            Complex cc = std::conj(psi[i]) * psi[j];
            cube.set_pair_re(i, j, -s * cc.real());
            cube.set_pair_im(i, j, -s * cc.imag());
        }
    }
    cube.set_triple(0, 1, 2, kTripleMagnitude * std::polar(1.0, 2.0 * std::numbers::pi * n / 3.0));
    return cube;
}

double family_overlap(const PureStateVector &psi, int n, const PureStateVector &phi, int m) {
    double fidelity = std::norm(psi.amplitudes().dot(phi.amplitudes()));
    return 0.25 * (1.0 + fidelity) + 0.5 * std::cos(2.0 * std::numbers::pi * (n - m) / 3.0);
}

VectorC parse_amplitudes(std::string_view text) {
    Cursor in(text);
    VectorC v = parse_amplitude_list(in);
    in.skip_space();
    if (!in.done()) {
        in.fail("trailing characters");
    }
    return v;
}

NamedState resolve_state(std::string_view spec) {
    std::string name(spec);
    if (name.size() > 5 && name.ends_with(".json")) {
        return NamedState{name, load_cube_file(name)};
    }
    if (name.size() >= 2 && name[0] == 'e' && std::isdigit(static_cast<unsigned char>(name[1]))) {
        size_t at = name.find('@');
        size_t k = std::stoul(name.substr(1, at == std::string::npos ? std::string::npos : at - 1));
        size_t levels = at == std::string::npos ? 3 : std::stoul(name.substr(at + 1));
        if (levels < 2 || k < 1 || k > levels) {
            throw std::invalid_argument("state '" + name + "': basis index must be in 1.." +
                                        std::to_string(levels));
        }
        return NamedState{name, HermitianCube::basis(levels, k - 1)};
    }
    if (name == "rho1" || name == "rho2" || name == "rho3") {
        return NamedState{name, nonquantum_basis().members[static_cast<size_t>(name[3] - '1')]};
    }
    if (name.starts_with("rho_n(")) {
        Cursor in(std::string_view(name).substr(6));
        std::optional<VectorC> amplitudes;
        std::optional<int> n;
        do {
            if (in.accept("psi")) {
                in.expect("=");
                amplitudes = parse_amplitude_list(in);
            } else if (in.accept("n")) {
                in.expect("=");
                n = static_cast<int>(in.number());
            } else {
                in.fail("expected 'psi=' or 'n='");
            }
        } while (in.accept(","));
        in.expect(")");
        in.skip_space();
        if (!in.done()) {
            in.fail("trailing characters");
        }
        if (!amplitudes || !n) {
            throw std::invalid_argument("state '" + name + "' needs both psi= and n=");
        }
        return NamedState{name, rho_n_of_psi(PureStateVector(*amplitudes), *n)};
    }
    throw std::invalid_argument("unknown state '" + name + "' (known: e1, e2, e3, rho1, rho2, rho3, "
                                "rho_n(psi=...,n=k), or a .json cube file)");
}

std::vector<std::string> registry_names() {
    return {"e1", "e2", "e3", "rho1", "rho2", "rho3"};
}

}  // namespace dcube
