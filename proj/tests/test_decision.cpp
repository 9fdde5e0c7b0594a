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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qsd/decision.hpp"
#include "qsd/qubit.hpp"
#include "qsd/risk.hpp"

using namespace qsd;

namespace {

constexpr double kPi = std::numbers::pi;

Posterior binary_posterior(double p1) { return Posterior({p1, 1.0 - p1}); }

// Random posterior over n hypotheses (normalized uniforms).
std::vector<double> random_posterior(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.01, 1.0);
    std::vector<double> w(n);
    double sum = 0.0;
    for (double &x : w) {
        x = u(rng);
        sum += x;
    }
    for (double &x : w) {
        x /= sum;
    }
    // squeeze the normalization residue into the last weight
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        s += w[i];
    }
    w[n - 1] = 1.0 - s;
    return w;
}

// Random Chow-ordered matrix: zero diagonal, reject row strictly between
// the diagonal and every wrong-report entry.
LossMatrix random_chow_matrix(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_real_distribution<double> reject_cost(0.1, 0.4);
    std::uniform_real_distribution<double> wrong_cost(0.5, 2.0);
    std::vector<std::vector<double>> cost(n + 1, std::vector<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        cost[0][j] = reject_cost(rng);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cost[i][j] = (i - 1 == j) ? 0.0 : wrong_cost(rng);
        }
    }
    return LossMatrix::general(cost);
}

}  // namespace

TEST_CASE("posterior follows the Bayes rule") {
    SUBCASE("uniform prior reproduces the likelihood") {
        const Posterior p = posterior(Prior({0.5, 0.5}), {0.8, 0.2});
        CHECK(std::abs(p.weight(0) - 0.8) <= 1e-12);
        CHECK(std::abs(p.weight(1) - 0.2) <= 1e-12);
    }
    SUBCASE("degenerate prior is a fixed point") {
        const Posterior p = posterior(Prior({1.0, 0.0}), {0.3, 0.9});
        CHECK(p.weight(0) == 1.0);
        CHECK(p.weight(1) == 0.0);
    }
    SUBCASE("hand computation") {
        // joint = (0.25*0.4, 0.75*0.2) = (0.1, 0.15), evidence 0.25
        const Posterior p = posterior(Prior({0.25, 0.75}), {0.4, 0.2});
        CHECK(std::abs(p.weight(0) - 0.4) <= 1e-12);
        CHECK(std::abs(p.weight(1) - 0.6) <= 1e-12);
        const double evidence = 0.25 * 0.4 + 0.75 * 0.2;
        CHECK(std::abs(p.weight(0) - 0.25 * 0.4 / evidence) <= 1e-15);
    }
    SUBCASE("posterior is normalized for random inputs") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int it = 0; it < 200; ++it) {
            const auto w = random_posterior(rng, 3);
            const Posterior p = posterior(Prior(w), {u(rng), u(rng), u(rng) + 1e-6});
            double sum = 0.0;
            for (std::size_t h = 0; h < 3; ++h) {
                sum += p.weight(h);
            }
            CHECK(std::abs(sum - 1.0) <= 1e-12);
        }
    }
    SUBCASE("zero evidence is an error") {
        CHECK_THROWS_AS(posterior(Prior({0.5, 0.5}), {0.0, 0.0}), std::domain_error);
        CHECK_THROWS_AS(posterior(Prior({1.0, 0.0}), {0.0, 0.7}), std::domain_error);
        CHECK_THROWS_AS(posterior(Prior({0.5, 0.5}), {0.1, -0.2}), std::invalid_argument);
        CHECK_THROWS_AS(posterior(Prior({0.5, 0.5}), {0.1, 0.2, 0.3}), std::invalid_argument);
    }
}

TEST_CASE("probability types validate their invariants") {
    CHECK_THROWS_AS(Prior({0.5, 0.4}), std::invalid_argument);
    CHECK_THROWS_AS(Prior({-0.1, 1.1}), std::invalid_argument);
    CHECK_THROWS_AS(Posterior({}), std::invalid_argument);
    CHECK_THROWS_AS(LikelihoodTable({{0.5, 0.5}, {0.6, 0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(LikelihoodTable({{0.5}, {0.4, 0.1}}), std::invalid_argument);
    // entries a hair outside [0, 1] are clamped, not rejected
    const LikelihoodTable t({{1.0 + 1e-15, 0.3}, {-1e-15, 0.7}});
    CHECK(t.at(0, 0) == 1.0);
    CHECK(t.at(1, 0) == 0.0);
}

TEST_CASE("conditional risk is the posterior-expected loss") {
    SUBCASE("0-1-lambda") {
        const LossMatrix loss = LossMatrix::zero_one_lambda(0.3);
        const Posterior p = binary_posterior(0.9);
        CHECK(std::abs(conditional_risk(loss, p, Decision(1)) - 0.1) <= 1e-12);
        CHECK(std::abs(conditional_risk(loss, p, Decision(2)) - 0.9) <= 1e-12);
        CHECK(std::abs(conditional_risk(loss, p, Decision(0)) - 0.3) <= 1e-12);
    }
    SUBCASE("0-lambdaE-lambdaR at the never-reject boundary") {
        const LossMatrix loss = LossMatrix::error_reject(2.0, 1.0);
        const Posterior p = binary_posterior(0.5);
        CHECK(std::abs(conditional_risk(loss, p, Decision(1)) - 1.0) <= 1e-12);
        CHECK(std::abs(conditional_risk(loss, p, Decision(2)) - 1.0) <= 1e-12);
        CHECK(std::abs(conditional_risk(loss, p, Decision(0)) - 1.0) <= 1e-12);
    }
    SUBCASE("general three-hypothesis matrix against a dot-product oracle") {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> u(0.0, 3.0);
        for (int it = 0; it < 100; ++it) {
            std::vector<std::vector<double>> cost(4, std::vector<double>(3));
            for (auto &row : cost) {
                for (double &v : row) {
                    v = u(rng);
                }
            }
            const LossMatrix loss = LossMatrix::general(cost);
            const Posterior p(random_posterior(rng, 3));
            for (int d = 0; d <= 3; ++d) {
                double expected = 0.0;
                for (std::size_t h = 0; h < 3; ++h) {
                    expected += cost[static_cast<std::size_t>(d)][h] * p.weight(h);
                }
                CHECK(std::abs(conditional_risk(loss, p, Decision(d)) - expected) <= 1e-15);
            }
        }
    }
    SUBCASE("dimension mismatch") {
        const LossMatrix loss = LossMatrix::zero_one_lambda(0.3);
        CHECK_THROWS_AS(conditional_risk(loss, Posterior({0.2, 0.3, 0.5}), Decision(1)),
                        std::invalid_argument);
        CHECK_THROWS_AS(conditional_risk(loss, binary_posterior(0.5), Decision(3)),
                        std::invalid_argument);
    }
}

TEST_CASE("optimal decision implements the posterior-threshold rule") {
    const LossMatrix loss = LossMatrix::zero_one_lambda(0.3);
    CHECK(optimal_decision(loss, binary_posterior(0.9)).index() == 1);
    CHECK(optimal_decision(loss, binary_posterior(0.6)).index() == 0);
    CHECK(optimal_decision(loss, binary_posterior(0.1)).index() == 2);
    // the threshold itself reports (>=), including when the arithmetic
    // route through the reject row would round the other way
    CHECK(optimal_decision(loss, binary_posterior(0.7)).index() == 1);

    SUBCASE("exact tie at lambda = 1/2") {
        const LossMatrix half = LossMatrix::zero_one_lambda(0.5);
        const Posterior p = binary_posterior(0.5);
        CHECK(optimal_decision(half, p).index() == 1);
        // every decision carries the same risk, so the tie is free
        const double r0 = conditional_risk(half, p, Decision(0));
        const double r1 = conditional_risk(half, p, Decision(1));
        const double r2 = conditional_risk(half, p, Decision(2));
        CHECK(std::abs(r0 - 0.5) <= 1e-12);
        CHECK(std::abs(r1 - 0.5) <= 1e-12);
        CHECK(std::abs(r2 - 0.5) <= 1e-12);
    }
    SUBCASE("seeded-random ties are reportable and reproducible") {
        const LossMatrix half = LossMatrix::zero_one_lambda(0.5);
        TieBreakPolicy a = TieBreakPolicy::seeded_random(99);
        TieBreakPolicy b = TieBreakPolicy::seeded_random(99);
        for (int it = 0; it < 20; ++it) {
            const Decision da = optimal_decision(half, binary_posterior(0.5), a);
            const Decision db = optimal_decision(half, binary_posterior(0.5), b);
            CHECK(da == db);
            CHECK(!da.is_reject());
        }
    }
}

TEST_CASE("optimal decision minimizes the conditional risk exhaustively") {
    std::mt19937_64 rng(2024);
    for (std::size_t n : {2u, 3u, 4u}) {
        for (int it = 0; it < 300; ++it) {
            const LossMatrix loss = random_chow_matrix(rng, n);
            REQUIRE(loss.chow_ordered());
            const Posterior p(random_posterior(rng, n));
            const Decision best = optimal_decision(loss, p);
            const double best_risk = conditional_risk(loss, p, best);
            for (int d = 0; d <= static_cast<int>(n); ++d) {
                CHECK(best_risk <= conditional_risk(loss, p, Decision(d)) + 1e-12);
            }
        }
    }
}

TEST_CASE("scaling a loss matrix never moves the argmin") {
    SUBCASE("named family, arbitrary factors") {
        const LossMatrix base = LossMatrix::error_reject(2.0, 0.6);
        for (double c : {1e-6, 0.5, 3.0, kPi, 1e6}) {
            const LossMatrix scaled = base.scaled(c);
            for (int i = 0; i <= 100; ++i) {
                const Posterior p = binary_posterior(i / 100.0);
                CHECK(optimal_decision(base, p) == optimal_decision(scaled, p));
            }
        }
    }
    SUBCASE("generic matrix, power-of-two factors are exact") {
        std::mt19937_64 rng(5);
        for (int it = 0; it < 50; ++it) {
            const LossMatrix base = random_chow_matrix(rng, 3);
            for (double c : {0.25, 2.0, 1024.0}) {
                const LossMatrix scaled = base.scaled(c);
                for (int jt = 0; jt < 20; ++jt) {
                    const Posterior p(random_posterior(rng, 3));
                    CHECK(optimal_decision(base, p) == optimal_decision(scaled, p));
                }
            }
        }
    }
}

TEST_CASE("the generalized family reduces to 0-1-lambda when lambda = lambdaR/lambdaE") {
    const std::pair<double, double> pairs[] = {{2.0, 0.6}, {3.0, 0.45}, {1.7, 0.8}, {10.0, 1.0}};
    for (const auto &[le, lr] : pairs) {
        const double lambda = lr / le;
        REQUIRE(lambda < 0.5);
        const LossMatrix a = LossMatrix::error_reject(le, lr);
        const LossMatrix b = LossMatrix::zero_one_lambda(lambda);
        for (int i = 0; i <= 200; ++i) {
            const Posterior p = binary_posterior(i / 200.0);
            CHECK(optimal_decision(a, p) == optimal_decision(b, p));
        }
    }
}

TEST_CASE("no rejection once the reject cost reaches 1/2") {
    for (double lambda : {0.5, 0.7, 1.0}) {
        const LossMatrix loss = LossMatrix::zero_one_lambda(lambda);
        for (int i = 0; i <= 100; ++i) {
            CHECK(!optimal_decision(loss, binary_posterior(i / 100.0)).is_reject());
        }
    }
}

TEST_CASE("total risk") {
    const double theta = kPi / 8;
    const Prior prior({0.5, 0.5});

    SUBCASE("rejecting everything costs exactly lambda") {
        const LikelihoodTable lik =
            born_probabilities(StatePair(theta), PovmFamily(0.5)).likelihoods();
        const DecisionRule reject_all = DecisionRule::always(Decision::reject(), 3);
        CHECK(std::abs(total_risk(LossMatrix::zero_one_lambda(0.3), prior, lik, reject_all) - 0.3) <=
              1e-12);
        CHECK(total_risk(LossMatrix::zero_one_lambda(0.0), prior, lik, reject_all) == 0.0);
    }
    SUBCASE("reference point") {
        const double lambda = 0.3;
        const double phi_star = optimal_angle(theta, lambda);
        const LossMatrix loss = LossMatrix::zero_one_lambda(lambda);
        const LikelihoodTable lik =
            born_probabilities(StatePair(theta), PovmFamily(phi_star)).likelihoods();
        const double risk = total_risk(loss, prior, lik, optimal_rule(loss, prior, lik));
        CHECK(std::abs(risk - 0.26) <= 5e-3);
        CHECK(std::abs(risk - 0.26003675456842555) <= 1e-12);
    }
    SUBCASE("undefined rule entries and dimension mismatches are errors") {
        const LikelihoodTable lik =
            born_probabilities(StatePair(theta), PovmFamily(0.5)).likelihoods();
        const LossMatrix loss = LossMatrix::zero_one_lambda(0.3);
        CHECK_THROWS_AS(total_risk(loss, prior, lik, DecisionRule::always(Decision::reject(), 2)),
                        std::invalid_argument);
        CHECK_THROWS_AS(total_risk(loss, prior, lik, DecisionRule::always(Decision(3), 3)),
                        std::invalid_argument);
    }
}

TEST_CASE("the optimal rule beats all 27 deterministic rules") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u_theta(0.05, kPi / 2);
    std::uniform_real_distribution<double> u_lambda(0.0, 1.0);
    const Prior prior({0.5, 0.5});
    for (int it = 0; it < 50; ++it) {
        const double theta = u_theta(rng);
        const double phi = u_theta(rng);
        const double lambda = u_lambda(rng);
        const LossMatrix loss = LossMatrix::zero_one_lambda(lambda);
        const LikelihoodTable lik = born_probabilities(StatePair(theta), PovmFamily(phi)).likelihoods();
        const double best = total_risk(loss, prior, lik, optimal_rule(loss, prior, lik));
        for (int d0 = 0; d0 < 3; ++d0) {
            for (int d1 = 0; d1 < 3; ++d1) {
                for (int d2 = 0; d2 < 3; ++d2) {
                    const DecisionRule rule({Decision(d0), Decision(d1), Decision(d2)});
                    CHECK(best <= total_risk(loss, prior, lik, rule) + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("chow ordering flag") {
    CHECK(LossMatrix::zero_one_lambda(0.3).chow_ordered());
    CHECK(!LossMatrix::zero_one_lambda(0.0).chow_ordered());   // reject not above correct
    CHECK(!LossMatrix::zero_one_lambda(1.0).chow_ordered());   // reject not below wrong
    CHECK(LossMatrix::error_reject(2.0, 0.5).chow_ordered());
    // reject dearer than an error: allowed to construct, just not Chow-ordered
    const LossMatrix inverted = LossMatrix::error_reject(1.0, 3.0);
    CHECK(!inverted.chow_ordered());
    CHECK(!optimal_decision(inverted, binary_posterior(0.2)).is_reject());
}
