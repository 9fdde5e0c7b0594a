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

#include "qsd/simulate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qsd/qubit.hpp"
#include "qsd/risk.hpp"

namespace qsd {

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform01(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

namespace {

// Occurrences of each (decision, truth) pair; decisions 0..2, truths 0..1.
struct Counts {
    std::array<std::array<std::uint64_t, 2>, 3> n{};

    void merge(const Counts &other) {
        for (std::size_t d = 0; d < 3; ++d) {
            for (std::size_t h = 0; h < 2; ++h) {
                n[d][h] += other.n[d][h];
            }
        }
    }
};

Counts run_range(const GameConfig &config, const std::array<std::array<double, 2>, 2> &cum,
                 const std::array<int, 3> &decision_of_outcome, std::uint64_t begin,
                 std::uint64_t end) {
    Counts counts;
    for (std::uint64_t i = begin; i < end; ++i) {
        const double u_hyp = uniform01(splitmix64_at(config.seed, 2 * i));
        const int truth = u_hyp < 0.5 ? 0 : 1;
        const double u_out = uniform01(splitmix64_at(config.seed, 2 * i + 1));
        const auto h = static_cast<std::size_t>(truth);
        const int outcome = u_out < cum[h][0] ? 0 : (u_out < cum[h][1] ? 1 : 2);
        const int decision = decision_of_outcome[static_cast<std::size_t>(outcome)];
        ++counts.n[static_cast<std::size_t>(decision)][h];
    }
    return counts;
}

}  // namespace

SimulationReport simulate_game(const GameConfig &config, unsigned threads) {
    if (config.trials == 0) {
        throw std::invalid_argument("simulate_game: need at least one trial");
    }
    if (config.loss.hypotheses() != 2) {
        throw std::invalid_argument("simulate_game: the game is binary; loss matrix must be 3 x 2");
    }
    if (config.rule.outcomes() != 3) {
        throw std::invalid_argument("simulate_game: rule must cover the three outcomes");
    }
    std::array<int, 3> decision_of_outcome{};
    for (std::size_t d = 0; d < 3; ++d) {
        const int idx = config.rule.at(d).index();
        if (idx > 2) {
            throw std::invalid_argument("simulate_game: rule decision out of range");
        }
        decision_of_outcome[d] = idx;
    }

    const BornTable born = born_probabilities(StatePair(config.theta), PovmFamily(config.phi));
    // Inverse-CDF thresholds per hypothesis, fixed outcome order E_0, E_1, E_2.
    std::array<std::array<double, 2>, 2> cum{};
    for (int h = 0; h < 2; ++h) {
        const auto hs = static_cast<std::size_t>(h);
        cum[hs][0] = born.prob(0, h);
        cum[hs][1] = born.prob(0, h) + born.prob(1, h);
    }

    unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    if (static_cast<std::uint64_t>(workers) > config.trials) {
        workers = static_cast<unsigned>(config.trials);
    }

    Counts counts;
    if (workers <= 1) {
        counts = run_range(config, cum, decision_of_outcome, 0, config.trials);
    } else {
        std::vector<Counts> partial(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::uint64_t chunk = config.trials / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = chunk * w;
            const std::uint64_t end = (w + 1 == workers) ? config.trials : chunk * (w + 1);
            pool.emplace_back([&, w, begin, end] {
                partial[w] = run_range(config, cum, decision_of_outcome, begin, end);
            });
        }
        for (auto &t : pool) {
            t.join();
        }
        for (const auto &p : partial) {
            counts.merge(p);  // integer merge: result independent of scheduling
        }
    }

    const auto trials = static_cast<double>(config.trials);
    double loss_sum = 0.0;
    double loss_sq_sum = 0.0;
    std::uint64_t n_correct = 0;
    std::uint64_t n_error = 0;
    std::uint64_t n_reject = 0;
    for (int d = 0; d < 3; ++d) {
        for (int h = 0; h < 2; ++h) {
            const std::uint64_t n = counts.n[static_cast<std::size_t>(d)][static_cast<std::size_t>(h)];
            if (n == 0) {
                continue;
            }
            const double cost = config.loss.cost(d, h);
            loss_sum += static_cast<double>(n) * cost;
            loss_sq_sum += static_cast<double>(n) * cost * cost;
            if (d == 0) {
                n_reject += n;
            } else if (d == h + 1) {
                n_correct += n;
            } else {
                n_error += n;
            }
        }
    }

    const double mean = loss_sum / trials;
    double std_error = 0.0;
    if (config.trials > 1) {
        const double variance = std::max(0.0, (loss_sq_sum - trials * mean * mean) / (trials - 1.0));
        std_error = std::sqrt(variance / trials);
    }

    SimulationReport report{};
    report.empirical_risk = mean;
    report.std_error = std_error;
    report.trials = config.trials;
    report.seed = config.seed;
    report.n_correct = n_correct;
    report.n_error = n_error;
    report.n_reject = n_reject;
    report.freq_correct = static_cast<double>(n_correct) / trials;
    report.freq_error = static_cast<double>(n_error) / trials;
    report.freq_reject = static_cast<double>(n_reject) / trials;
    return report;
}

std::vector<RiskValidationRow> validate_risk_surface(double theta, const std::vector<double> &lambdas,
                                                     std::uint64_t trials_per_point,
                                                     std::uint64_t seed) {
    const Prior prior({0.5, 0.5});
    std::vector<RiskValidationRow> rows;
    rows.reserve(lambdas.size());
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        const double lambda = lambdas[k];
        const double phi_star = optimal_angle(theta, lambda);
        const LossMatrix loss = LossMatrix::zero_one_lambda(lambda);
        const LikelihoodTable likelihood =
            born_probabilities(StatePair(theta), PovmFamily(phi_star)).likelihoods();
        const GameConfig config{theta,         loss,
                                phi_star,      optimal_rule(loss, prior, likelihood),
                                trials_per_point, splitmix64_at(seed, k)};
        const SimulationReport report = simulate_game(config);
        const double analytic = analytic_risk(theta, lambda, phi_star);

        double z = 0.0;
        if (report.std_error > 0.0) {
            z = (report.empirical_risk - analytic) / report.std_error;
        } else if (report.empirical_risk != analytic) {
            z = report.empirical_risk > analytic ? std::numeric_limits<double>::infinity()
                                                 : -std::numeric_limits<double>::infinity();
        }
        rows.push_back(RiskValidationRow{lambda, phi_star, analytic, report.empirical_risk,
                                         report.std_error, z, std::abs(z) > 4.0});
    }
    return rows;
}

}  // namespace qsd
