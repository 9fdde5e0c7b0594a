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
 * @file simulate.hpp
 * Seeded Monte Carlo simulation of the two-party discrimination game: one
 * party draws a hypothesis with probability 1/2 each and hands over the
 * corresponding state, the other measures, applies a decision rule and pays
 * the loss of the decision against the truth.
 *
 * Randomness is counter-based SplitMix64: draw k of a run with seed s is
 * the SplitMix64 output function applied to state s + (k+1) * gamma, with
 * gamma = 0x9E3779B97F4A7C15. Trial i consumes exactly draws 2i (hypothesis)
 * and 2i+1 (outcome, by inverse CDF over the Born row in the fixed order
 * E_0, E_1, E_2), so every trial's randomness is a pure function of
 * (seed, trial index) and reports are bit-identical for any thread count or
 * execution order.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "qsd/decision.hpp"

namespace qsd {

/// Counter-based SplitMix64: output for draw `index` of stream `seed`.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits.
double uniform01(std::uint64_t bits);

/// A fully specified discrimination game: state separation, measurement
/// angle, binary loss matrix, decision rule over the three outcomes, trial
/// count and RNG seed. The hypothesis priors are the symmetric 1/2, 1/2 of
/// the quantum layer.
struct GameConfig {
    double theta;
    LossMatrix loss;
    double phi;
    DecisionRule rule;
    std::uint64_t trials;
    std::uint64_t seed;
};

struct SimulationReport {
    double empirical_risk;  // mean per-trial loss
    double std_error;       // sample std / sqrt(trials); 0 when undefined
    std::uint64_t trials;
    std::uint64_t seed;
    // Counts by how the decision relates to the truth; they sum to trials
    // exactly. Frequencies are the counts over trials.
    std::uint64_t n_correct;
    std::uint64_t n_error;
    std::uint64_t n_reject;
    double freq_correct;
    double freq_error;
    double freq_reject;
};

/**
 * Runs the game. Losses are accrued exactly: the simulation counts how
 * often each (decision, truth) pair occurred and contracts the integer
 * counts against the loss matrix at the end, so there is no summation
 * drift at any trial count. `threads` > 1 splits the trial range across
 * that many workers (0 picks the hardware concurrency); the result is
 * identical for every choice.
 */
SimulationReport simulate_game(const GameConfig &config, unsigned threads = 1);

/// One validation row: analytic vs empirical risk at the optimal angle.
/// z = (empirical - analytic) / std_error, taken as 0 when both agree
/// exactly with zero spread and +/-inf when the spread alone is zero.
struct RiskValidationRow {
    double lambda;
    double phi_star;
    double analytic_risk;
    double empirical_risk;
    double std_error;
    double z;
    bool flagged;  // |z| > 4
};

/**
 * Simulates the 0-1-lambda game at phi*(lambda) for every lambda in the
 * grid and compares against the closed-form risk. Point k runs with seed
 * splitmix64_at(seed, k), so the table is reproducible and rows are
 * independent.
 */
std::vector<RiskValidationRow> validate_risk_surface(double theta, const std::vector<double> &lambdas,
                                                     std::uint64_t trials_per_point, std::uint64_t seed);

}  // namespace qsd
