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

#include "qsd/risk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qsd/qubit.hpp"

namespace qsd {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_range(double value, double lo, double hi, const char *name) {
    if (!(value >= lo && value <= hi)) {
        throw std::domain_error(std::string(name) + " out of range: " + std::to_string(value));
    }
}

double grid_point(const GridAxis &axis, std::size_t k) {
    if (axis.steps == 1) {
        return axis.min;
    }
    if (k + 1 == axis.steps) {
        return axis.max;  // keep the endpoint exact
    }
    return axis.min + (axis.max - axis.min) * (static_cast<double>(k) / static_cast<double>(axis.steps - 1));
}

void check_axis(const GridAxis &axis, const char *name) {
    if (axis.steps == 0 || (axis.steps == 1 && axis.min != axis.max)) {
        throw std::invalid_argument(std::string(name) + ": a single-point axis needs min == max");
    }
    if (axis.steps > 1 && !(axis.min < axis.max)) {
        throw std::invalid_argument(std::string(name) + ": need min < max for a swept axis");
    }
}

}  // namespace

std::vector<double> GridAxis::points() const {
    check_axis(*this, "GridAxis");
    std::vector<double> out(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        out[k] = grid_point(*this, k);
    }
    return out;
}

double analytic_risk(double theta, double lambda, double phi) {
    check_range(theta, 0.0, kHalfPi, "theta");
    check_range(lambda, 0.0, 1.0, "lambda");
    check_range(phi, 0.0, kHalfPi, "phi");
    // Beyond 1/2 the reject option is never exercised, so the risk is the
    // lambda = 1/2 one.
    const double le = std::min(lambda, 0.5);
    const double num =
        (2.0 * le - 1.0) * (std::cos(theta) * std::cos(phi) - 1.0) - std::sin(theta) * std::sin(phi);
    const double den = 2.0 * (1.0 + std::cos(phi));
    // rounding can push the zero-risk corner (lambda = 0, phi = theta) a few
    // ulp below zero; the risk is a mean of nonnegative losses
    return std::max(0.0, le + std::min(0.0, num / den));
}

double helstrom_boundary(double theta) {
    check_range(theta, 0.0, kHalfPi, "theta");
    return 0.5 * (1.0 - std::tan(0.5 * theta));
}

double optimal_angle(double theta, double lambda) {
    check_range(theta, 0.0, kHalfPi, "theta");
    check_range(lambda, 0.0, 1.0, "lambda");
    if (lambda >= helstrom_boundary(theta)) {
        return kHalfPi;
    }
    // acot with range (0, pi), so the branch is continuous up to the
    // boundary. theta == 0 gives cot = +inf and thus phi* = 0.
    const double cot_half_theta = 1.0 / std::tan(0.5 * theta);
    return 2.0 * std::atan2(1.0, (1.0 - 2.0 * lambda) * cot_half_theta);
}

double grid_search_optimal_angle(double theta, double lambda, std::size_t resolution) {
    if (resolution < 1000) {
        throw std::invalid_argument("grid_search_optimal_angle: resolution must be >= 1000");
    }
    const GridAxis axis{0.0, kHalfPi, resolution};
    double best_phi = 0.0;
    double best_risk = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < resolution; ++k) {
        const double phi = grid_point(axis, k);
        const double risk = analytic_risk(theta, lambda, phi);
        if (risk < best_risk) {
            best_risk = risk;
            best_phi = phi;
        }
    }
    return best_phi;
}

double generalized_risk(double theta, double lambda_e, double lambda_r, double phi) {
    // StatePair/PovmFamily validate theta and phi; LossMatrix validates the costs.
    const LossMatrix loss = LossMatrix::error_reject(lambda_e, lambda_r);
    const BornTable born = born_probabilities(StatePair(theta), PovmFamily(phi));
    const Prior prior({0.5, 0.5});
    const LikelihoodTable likelihood = born.likelihoods();
    return total_risk(loss, prior, likelihood, optimal_rule(loss, prior, likelihood));
}

double generalized_grid_search_optimal_angle(double theta, double lambda_e, double lambda_r,
                                             std::size_t resolution) {
    if (resolution < 1000) {
        throw std::invalid_argument("generalized_grid_search_optimal_angle: resolution must be >= 1000");
    }
    const GridAxis axis{0.0, kHalfPi, resolution};
    double best_phi = 0.0;
    double best_risk = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < resolution; ++k) {
        const double phi = grid_point(axis, k);
        const double risk = generalized_risk(theta, lambda_e, lambda_r, phi);
        if (risk < best_risk) {
            best_risk = risk;
            best_phi = phi;
        }
    }
    return best_phi;
}

namespace {

DecisionRegionMap region_map(LossFamily family, double theta, double lambda_r,
                             const GridAxis &cost_axis, const GridAxis &phi_axis) {
    check_axis(cost_axis, "cost axis");
    check_axis(phi_axis, "phi axis");
    const Prior prior({0.5, 0.5});
    const StatePair states(theta);

    DecisionRegionMap map{family, theta, lambda_r, cost_axis, phi_axis, {}};
    map.cells.reserve(cost_axis.steps * phi_axis.steps);
    for (std::size_t i = 0; i < cost_axis.steps; ++i) {
        const double cost = grid_point(cost_axis, i);
        const LossMatrix loss = family == LossFamily::kZeroOneLambda
                                    ? LossMatrix::zero_one_lambda(cost)
                                    : LossMatrix::error_reject(cost, lambda_r);
        for (std::size_t k = 0; k < phi_axis.steps; ++k) {
            const double phi = grid_point(phi_axis, k);
            const LikelihoodTable likelihood =
                born_probabilities(states, PovmFamily(phi)).likelihoods();
            const DecisionRule rule = optimal_rule(loss, prior, likelihood);
            map.cells.push_back(RegionCell{
                cost, phi,
                {rule.at(0).index(), rule.at(1).index(), rule.at(2).index()}});
        }
    }
    return map;
}

}  // namespace

DecisionRegionMap decision_region_map_zero_one_lambda(double theta, const GridAxis &lambda_axis,
                                                      const GridAxis &phi_axis) {
    return region_map(LossFamily::kZeroOneLambda, theta, 0.0, lambda_axis, phi_axis);
}

DecisionRegionMap decision_region_map_error_reject(double theta, double lambda_r,
                                                   const GridAxis &lambda_e_axis,
                                                   const GridAxis &phi_axis) {
    return region_map(LossFamily::kErrorReject, theta, lambda_r, lambda_e_axis, phi_axis);
}

}  // namespace qsd
