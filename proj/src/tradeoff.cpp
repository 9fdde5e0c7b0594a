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

#include "qsd/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qsd/qubit.hpp"
#include "qsd/risk.hpp"

namespace qsd {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_inputs(double theta, double lambda) {
    if (!(theta > 0.0 && theta <= kHalfPi)) {
        throw std::domain_error("theta must lie in (0, pi/2], got " + std::to_string(theta));
    }
    if (!(lambda >= 0.0 && lambda <= 0.5)) {
        throw std::domain_error("lambda must lie in [0, 1/2], got " + std::to_string(lambda));
    }
}

// Kahan-compensated accumulator; the quadratures below add tens of
// thousands of terms and are checked against closed forms at 1e-4 and
// better, so the plain running sum's drift is worth suppressing.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double value) {
        const double y = value - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

double reject_probability(double theta, double lambda) {
    return outcome_probabilities(theta, lambda).p_reject;
}

// Composite trapezoid of p_reject over [a, b] with step <= requested.
double trapezoid_reject(double theta, double a, double b, double step) {
    if (!(b > a)) {
        return 0.0;
    }
    const auto n = static_cast<std::size_t>(std::ceil((b - a) / step));
    const double h = (b - a) / static_cast<double>(n);
    CompensatedSum acc;
    acc.add(0.5 * reject_probability(theta, a));
    for (std::size_t k = 1; k < n; ++k) {
        acc.add(reject_probability(theta, a + h * static_cast<double>(k)));
    }
    acc.add(0.5 * reject_probability(theta, b));
    return h * acc.sum;
}

// -sum of midpoint-weighted increments of p_reject over [a, b]: the finite
// difference form of -integral lambda' dp_reject.
double stieltjes_error(double theta, double a, double b, double step) {
    if (!(b > a)) {
        return 0.0;
    }
    const auto n = static_cast<std::size_t>(std::ceil((b - a) / step));
    const double h = (b - a) / static_cast<double>(n);
    CompensatedSum acc;
    double left = a;
    double p_left = reject_probability(theta, left);
    for (std::size_t k = 1; k <= n; ++k) {
        const double right = (k == n) ? b : a + h * static_cast<double>(k);
        const double p_right = reject_probability(theta, right);
        acc.add(-0.5 * (left + right) * (p_right - p_left));
        left = right;
        p_left = p_right;
    }
    return acc.sum;
}

}  // namespace

OutcomeProbabilities outcome_probabilities(double theta, double lambda) {
    check_inputs(theta, lambda);
    const double phi_star = optimal_angle(theta, lambda);
    const BornTable born = born_probabilities(StatePair(theta), PovmFamily(phi_star));
    // At the optimal angle the optimal rule reports D on E_D and rejects on
    // the inconclusive outcome, so the four probabilities read off the Born
    // table directly.
    const double p_correct = 0.5 * (born.prob(1, 0) + born.prob(2, 1));
    const double p_error = 0.5 * (born.prob(2, 0) + born.prob(1, 1));
    const double p_reject = 0.5 * (born.prob(0, 0) + born.prob(0, 1));
    return OutcomeProbabilities{theta, lambda, p_correct, p_error, p_reject, p_correct + p_error};
}

double chow_identity_risk(double theta, double lambda) {
    const OutcomeProbabilities p = outcome_probabilities(theta, lambda);
    return p.p_error + lambda * p.p_reject;
}

double risk_from_reject_integral(double theta, double lambda, double step) {
    check_inputs(theta, lambda);
    if (!(step > 0.0)) {
        throw std::domain_error("quadrature step must be positive");
    }
    // p_reject vanishes identically above the Helstrom boundary, so only
    // the lower piece contributes; splitting there also keeps the kink off
    // the interior of the integration range.
    const double split = std::clamp(helstrom_boundary(theta), 0.0, lambda);
    return trapezoid_reject(theta, 0.0, split, step);
}

double error_from_reject_integral(double theta, double lambda, double step) {
    check_inputs(theta, lambda);
    if (!(step > 0.0)) {
        throw std::domain_error("quadrature step must be positive");
    }
    const double split = std::clamp(helstrom_boundary(theta), 0.0, lambda);
    return stieltjes_error(theta, 0.0, split, step);
}

TradeoffCurve tradeoff_curve(double theta, const std::vector<double> &lambdas) {
    TradeoffCurve curve{theta, {}};
    curve.points.reserve(lambdas.size());
    for (double lambda : lambdas) {
        const OutcomeProbabilities p = outcome_probabilities(theta, lambda);
        curve.points.push_back(TradeoffPoint{lambda, p.p_reject, p.p_error});
    }
    return curve;
}

double lambda_from_reject_probability(double theta, double target) {
    check_inputs(theta, 0.0);
    const double max_reject = std::cos(theta);
    if (!(target >= 0.0) || target > max_reject) {
        throw std::domain_error("target rejection probability must lie in [0, cos(theta)], got " +
                                std::to_string(target));
    }
    // p_reject decreases from cos(theta) at lambda = 0 to 0 at the Helstrom
    // boundary and stays there; bisect for the smallest lambda at or below
    // the target.
    double lo = 0.0;
    double hi = 0.5;
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-10; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (reject_probability(theta, mid) <= target) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace qsd
