// Copyright 2026 the qsd developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsd/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsd {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_angle(double value, const char *name) {
    if (!(value >= 0.0 && value <= kHalfPi)) {
        throw std::domain_error(std::string(name) + " must lie in [0, pi/2], got " +
                                std::to_string(value));
    }
}

}  // namespace

bool RealMatrix2::symmetric(double tol) const { return std::abs(m01 - m10) <= tol; }

double RealMatrix2::min_eigenvalue() const {
    const double mean = 0.5 * (m00 + m11);
    const double half_diff = 0.5 * (m00 - m11);
    const double off = 0.5 * (m01 + m10);
    return mean - std::sqrt(half_diff * half_diff + off * off);
}

double RealMatrix2::expectation(const std::array<double, 2> &v) const {
    return v[0] * v[0] * m00 + v[0] * v[1] * (m01 + m10) + v[1] * v[1] * m11;
}

StatePair::StatePair(double theta) : theta_(theta) { check_angle(theta, "theta"); }

double StatePair::overlap() const { return std::cos(theta_); }

std::array<double, 2> StatePair::state(int hypothesis) const {
    if (hypothesis != 0 && hypothesis != 1) {
        throw std::invalid_argument("StatePair: hypothesis must be 0 or 1");
    }
    const double c = std::cos(0.5 * theta_);
    const double s = std::sin(0.5 * theta_);
    return {c, hypothesis == 0 ? s : -s};
}

PovmFamily::PovmFamily(double phi) : phi_(phi) {
    if (!(phi >= 0.0 && phi <= kHalfPi)) {
        throw std::domain_error(
            "PovmFamily: phi must lie in [0, pi/2]; beyond pi/2 the inconclusive element "
            "is not a positive operator (got " +
            std::to_string(phi) + ")");
    }
    if (phi == kHalfPi) {
        // Helstrom endpoint, built exactly: E_0 vanishes and E_1/E_2 are the
        // |+><+| and |-><-| projectors.
        elements_[0] = RealMatrix2::zero();
        elements_[1] = {0.5, 0.5, 0.5, 0.5};
        elements_[2] = {0.5, -0.5, -0.5, 0.5};
        return;
    }
    const double s = std::sin(0.5 * phi);
    const double c = std::cos(0.5 * phi);
    const double norm = 1.0 / (2.0 * c * c);
    const double t = s / c;
    elements_[1] = {norm * s * s, norm * s * c, norm * s * c, norm * c * c};
    elements_[2] = {norm * s * s, -norm * s * c, -norm * s * c, norm * c * c};
    elements_[0] = {1.0 - t * t, 0.0, 0.0, 0.0};
}

PovmFamily PovmFamily::helstrom() { return PovmFamily(kHalfPi); }

PovmFamily PovmFamily::usd(const StatePair &states) { return PovmFamily(states.theta()); }

BornTable::BornTable(const std::array<double, 3> &row_h1, const std::array<double, 3> &row_h2) {
    rows_[0] = row_h1;
    rows_[1] = row_h2;
    for (auto &row : rows_) {
        for (double &p : row) {
            if (!std::isfinite(p) || p < -kProbTolerance || p > 1.0 + kProbTolerance) {
                throw std::invalid_argument("BornTable: probabilities must lie in [0, 1]");
            }
            p = std::clamp(p, 0.0, 1.0);
        }
    }
}

LikelihoodTable BornTable::likelihoods() const {
    std::vector<std::vector<double>> rows(3);
    for (int d = 0; d < 3; ++d) {
        rows[static_cast<std::size_t>(d)] = {prob(d, 0), prob(d, 1)};
    }
    return LikelihoodTable(std::move(rows));
}

BornTable born_probabilities(const StatePair &states, const PovmFamily &povm) {
    std::array<std::array<double, 3>, 2> rows;
    for (int h = 0; h < 2; ++h) {
        const auto v = states.state(h);
        for (int d = 0; d < 3; ++d) {
            rows[static_cast<std::size_t>(h)][static_cast<std::size_t>(d)] =
                povm.element(d).expectation(v);
        }
    }
    return BornTable(rows[0], rows[1]);
}

}  // namespace qsd
