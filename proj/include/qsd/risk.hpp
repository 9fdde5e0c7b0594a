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

/**
 * @file risk.hpp
 * Closed-form Bayes risk and optimal measurement angle for the 0-1-lambda
 * loss, the generalized 0-lambdaE-lambdaR risk, decision-region maps over
 * parameter grids, and an independent grid-search oracle.
 */

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "qsd/decision.hpp"

namespace qsd {

/// One sample of the 0-1-lambda risk surface. Under the optimal rule the
/// risk never exceeds lambda (rejecting everything costs exactly lambda).
struct RiskPoint {
    double theta;
    double lambda;
    double phi;
    double risk;
};

/// One sample of the generalized risk surface. Under the optimal rule the
/// risk never exceeds min(lambda_r, lambda_e / 2).
struct GeneralRiskPoint {
    double theta;
    double lambda_e;
    double lambda_r;
    double phi;
    double risk;
};

/**
 * Expected 0-1-lambda loss of the optimal decision rule when measuring at
 * angle phi, for state separation theta and reject cost lambda.
 *
 * For lambda <= 1/2 this is
 *
 *   lambda + min{0, [(2 lambda - 1)(cos theta cos phi - 1)
 *                    - sin theta sin phi] / [2 (1 + cos phi)]}.
 *
 * For lambda > 1/2 the optimal rule never rejects (reporting either
 * hypothesis on the inconclusive outcome costs only 1/2 in expectation), so
 * the risk is that of lambda = 1/2: the reject cost is clamped before the
 * formula is evaluated. Domains: theta in [0, pi/2], lambda in [0, 1],
 * phi in [0, pi/2].
 */
double analytic_risk(double theta, double lambda, double phi);

/// Reject-cost boundary (1/2)(1 - tan(theta/2)); at or above it the
/// Helstrom measurement (phi = pi/2) is optimal.
double helstrom_boundary(double theta);

/**
 * Measurement angle minimizing analytic_risk over phi:
 *
 *   phi* = 2 acot[(1 - 2 lambda) cot(theta/2)]   if lambda < helstrom_boundary(theta)
 *   phi* = pi/2                                  otherwise,
 *
 * with acot taken in (0, pi) so the first branch is continuous up to the
 * boundary, where both branches give pi/2. lambda = 0 lands on phi* = theta
 * (unambiguous discrimination); theta = 0 yields phi* = 0 as the limit of
 * the first branch. Note that for lambda = 0 the risk is flat at zero, so
 * phi* is merely one minimizer of many; the closed form is returned anyway.
 */
double optimal_angle(double theta, double lambda);

/**
 * Independent oracle for optimal_angle: argmin of analytic_risk over an
 * inclusive uniform grid of `resolution` points on [0, pi/2] (first minimum
 * wins). Wherever the minimizer is unique this lands within one grid step
 * of the closed form; where the risk surface is flat at lambda only the
 * minimal value is meaningful. resolution must be at least 1000.
 */
double grid_search_optimal_angle(double theta, double lambda, std::size_t resolution = 10000);

/**
 * Expected 0-lambdaE-lambdaR loss of the optimal decision rule at
 * measurement angle phi. Computed through the generic decision layer (Born
 * probabilities -> posteriors -> per-outcome optimal decisions -> average
 * loss) rather than a closed form, so it doubles as the exhaustive route
 * when cross-checking analytic_risk: for lambda_r/lambda_e < 1/2 it equals
 * lambda_e * analytic_risk(theta, lambda_r/lambda_e, phi).
 *
 * When lambda_r > lambda_e/2 the rule never rejects: the inconclusive
 * outcome reports a hypothesis by tie-break and contributes
 * (lambda_e/2) * Pr(E_0) to the risk.
 */
double generalized_risk(double theta, double lambda_e, double lambda_r, double phi);

/// Grid-search argmin of generalized_risk over phi on [0, pi/2].
double generalized_grid_search_optimal_angle(double theta, double lambda_e, double lambda_r,
                                             std::size_t resolution = 10000);

/// Inclusive uniform grid on [min, max] with `steps` >= 2 points (a single
/// fixed value is expressed as steps == 1 with min == max).
struct GridAxis {
    double min;
    double max;
    std::size_t steps;

    std::vector<double> points() const;
    double step() const { return steps > 1 ? (max - min) / static_cast<double>(steps - 1) : 0.0; }
};

enum class LossFamily {
    kZeroOneLambda,
    kErrorReject,
};

/// Optimal decision for each of the three outcomes at one grid cell.
/// `cost` is lambda for the 0-1-lambda family and lambda_e for the
/// generalized family.
struct RegionCell {
    double cost;
    double phi;
    std::array<int, 3> decision;
};

/// Per-outcome optimal decisions on a (cost, phi) grid; cells are stored
/// cost-major. Cells whose outcome has zero probability under both
/// hypotheses record reject (the outcome never occurs).
struct DecisionRegionMap {
    LossFamily family;
    double theta;
    double lambda_r;  // only meaningful for kErrorReject
    GridAxis cost_axis;
    GridAxis phi_axis;
    std::vector<RegionCell> cells;
};

DecisionRegionMap decision_region_map_zero_one_lambda(double theta, const GridAxis &lambda_axis,
                                                      const GridAxis &phi_axis);
DecisionRegionMap decision_region_map_error_reject(double theta, double lambda_r,
                                                   const GridAxis &lambda_e_axis,
                                                   const GridAxis &phi_axis);

}  // namespace qsd
