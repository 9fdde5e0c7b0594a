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
 * @file tradeoff.hpp
 * Correct/error/reject/accept bookkeeping under the optimal strategy, the
 * Chow identities relating risk to those probabilities, and the error-reject
 * tradeoff curve.
 *
 * All operations take theta in (0, pi/2] and lambda in [0, 1/2] and evaluate
 * the measurement at the optimal angle phi*(lambda), where the optimal rule
 * is simply "report D when E_D occurs" (rejecting on the inconclusive
 * outcome).
 */

#pragma once

#include <vector>

namespace qsd {

struct OutcomeProbabilities {
    double theta;
    double lambda;
    double p_correct;
    double p_error;
    double p_reject;
    double p_accept;  // p_correct + p_error
};

/// The four outcome probabilities at phi*(lambda). They satisfy
/// p_correct + p_error + p_reject = 1.
OutcomeProbabilities outcome_probabilities(double theta, double lambda);

/// Chow's identity: the optimal risk equals p_error + lambda * p_reject.
double chow_identity_risk(double theta, double lambda);

/**
 * The optimal risk recovered as the area under the reject curve:
 * integral over lambda' in [0, lambda] of p_reject(theta, lambda'), the
 * integrand evaluated at the per-lambda' optimal angle. Composite
 * trapezoidal quadrature; the range is split at helstrom_boundary(theta),
 * where the reject curve has a kink and becomes identically zero.
 */
double risk_from_reject_integral(double theta, double lambda, double step = 1e-5);

/**
 * The error probability recovered from the reject curve:
 * -integral over [0, lambda] of lambda' d p_reject(theta, lambda'),
 * evaluated as a Riemann sum with finite differences of p_reject (midpoint
 * weights), split at the Helstrom boundary like the risk integral.
 */
double error_from_reject_integral(double theta, double lambda, double step = 1e-5);

struct TradeoffPoint {
    double lambda;
    double p_reject;
    double p_error;
};

/// (p_reject, p_error) samples indexed by lambda, for a fixed theta.
/// p_reject is non-increasing and p_error non-decreasing in lambda, and the
/// slope dp_error/dp_reject between neighbouring samples is -lambda.
struct TradeoffCurve {
    double theta;
    std::vector<TradeoffPoint> points;
};

TradeoffCurve tradeoff_curve(double theta, const std::vector<double> &lambdas);

/**
 * Inverse of the reject curve: the lambda at which
 * p_reject(theta, lambda) = target. Bisection on the monotone curve over
 * lambda in [0, 1/2] (tolerance 1e-10, at most 200 halvings). target = 0
 * maps to the smallest lambda with no rejection, i.e. the Helstrom
 * boundary. Throws std::domain_error when target exceeds the maximum
 * rejection probability cos(theta).
 */
double lambda_from_reject_probability(double theta, double target);

}  // namespace qsd
