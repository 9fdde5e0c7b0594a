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

#include "qsd/qubit.hpp"
#include "qsd/risk.hpp"

using namespace qsd;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

}  // namespace

TEST_CASE("state pair geometry") {
    for (double theta : {0.0, 0.2, kPi / 8, kPi / 4, kHalfPi}) {
        const StatePair states(theta);
        const auto a = states.state(0);
        const auto b = states.state(1);
        CHECK(std::abs(a[0] * a[0] + a[1] * a[1] - 1.0) <= 1e-12);
        CHECK(std::abs(b[0] * b[0] + b[1] * b[1] - 1.0) <= 1e-12);
        CHECK(std::abs((a[0] * b[0] + a[1] * b[1]) - std::cos(theta)) <= 1e-12);
        CHECK(states.overlap() == std::cos(theta));
    }
    CHECK_THROWS_AS(StatePair(-0.01), std::domain_error);
    CHECK_THROWS_AS(StatePair(kHalfPi + 0.01), std::domain_error);
}

TEST_CASE("special POVM endpoints are exact") {
    SUBCASE("phi = 0") {
        const PovmFamily povm(0.0);
        CHECK(povm.element(0).m00 == 1.0);
        CHECK(povm.element(0).m01 == 0.0);
        CHECK(povm.element(0).m11 == 0.0);
        for (int d : {1, 2}) {
            CHECK(povm.element(d).m00 == 0.0);
            CHECK(povm.element(d).m01 == 0.0);
            CHECK(povm.element(d).m11 == 0.5);
        }
    }
    SUBCASE("phi = pi/2 is the Helstrom measurement") {
        const PovmFamily povm = PovmFamily::helstrom();
        CHECK(povm.phi() == kHalfPi);
        const RealMatrix2 &e0 = povm.element(0);
        CHECK(e0.m00 == 0.0);
        CHECK(e0.m01 == 0.0);
        CHECK(e0.m10 == 0.0);
        CHECK(e0.m11 == 0.0);
        CHECK(povm.element(1).m00 == 0.5);
        CHECK(povm.element(1).m01 == 0.5);
        CHECK(povm.element(2).m01 == -0.5);
        // no inconclusive outcome for any theta
        for (double theta : {0.0, 0.3, kPi / 8, kHalfPi}) {
            const BornTable t = born_probabilities(StatePair(theta), povm);
            CHECK(t.prob(0, 0) == 0.0);
            CHECK(t.prob(0, 1) == 0.0);
        }
    }
}

TEST_CASE("POVM completeness and positivity across the domain") {
    for (std::size_t k = 0; k < 1000; ++k) {
        const double phi = kHalfPi * static_cast<double>(k) / 999.0;
        const PovmFamily povm(phi);
        const RealMatrix2 sum = povm.element(0) + povm.element(1) + povm.element(2);
        CHECK(std::abs(sum.m00 - 1.0) <= 1e-12);
        CHECK(std::abs(sum.m01) <= 1e-12);
        CHECK(std::abs(sum.m10) <= 1e-12);
        CHECK(std::abs(sum.m11 - 1.0) <= 1e-12);
        for (int d = 0; d < 3; ++d) {
            CHECK(povm.element(d).symmetric());
            CHECK(povm.element(d).min_eigenvalue() >= -1e-12);
        }
    }
}

TEST_CASE("construction fails beyond pi/2 where E0 turns indefinite") {
    // the formula entry 1 - tan^2(phi/2) really is negative out there
    const double phi_bad = kHalfPi + 1e-3;
    const double t = std::tan(0.5 * phi_bad);
    CHECK(1.0 - t * t < 0.0);
    CHECK_THROWS_AS(PovmFamily{phi_bad}, std::domain_error);
    CHECK_THROWS_AS(PovmFamily(-1e-3), std::domain_error);
    CHECK_THROWS_AS(PovmFamily(4.0), std::domain_error);
    CHECK_THROWS_AS(PovmFamily(std::nan("")), std::domain_error);
}

TEST_CASE("Born rows are normalized and symmetric") {
    for (int i = 0; i <= 20; ++i) {
        const double theta = kHalfPi * i / 20.0;
        const StatePair states(theta);
        for (int k = 0; k <= 20; ++k) {
            const double phi = kHalfPi * k / 20.0;
            const BornTable t = born_probabilities(states, PovmFamily(phi));
            for (int h = 0; h < 2; ++h) {
                const double sum = t.prob(0, h) + t.prob(1, h) + t.prob(2, h);
                CHECK(std::abs(sum - 1.0) <= 1e-12);
            }
            // the mirror symmetry of the configuration
            CHECK(std::abs(t.prob(1, 0) - t.prob(2, 1)) <= 1e-15);
            CHECK(std::abs(t.prob(1, 1) - t.prob(2, 0)) <= 1e-15);
            CHECK(std::abs(t.prob(0, 0) - t.prob(0, 1)) <= 1e-15);
            // with equal priors the two conclusive outcomes are equally likely
            const double pr_e1 = 0.5 * (t.prob(1, 0) + t.prob(1, 1));
            const double pr_e2 = 0.5 * (t.prob(2, 0) + t.prob(2, 1));
            CHECK(std::abs(pr_e1 - pr_e2) <= 1e-15);
        }
    }
}

TEST_CASE("inconclusive probability matches its closed form") {
    for (int i = 0; i <= 30; ++i) {
        const double theta = kHalfPi * i / 30.0;
        const StatePair states(theta);
        for (int k = 0; k <= 30; ++k) {
            const double phi = kHalfPi * k / 30.0;
            const BornTable t = born_probabilities(states, PovmFamily(phi));
            const double c = std::cos(0.5 * theta);
            const double tn = std::tan(0.5 * phi);
            const double closed = c * c * (1.0 - tn * tn);
            CHECK(std::abs(t.prob(0, 0) - closed) <= 1e-12);
        }
    }
}

TEST_CASE("unambiguous discrimination never misidentifies") {
    for (int i = 1; i <= 20; ++i) {
        const double theta = kHalfPi * i / 20.0;
        const StatePair states(theta);
        const PovmFamily povm = PovmFamily::usd(states);
        CHECK(povm.phi() == theta);
        const BornTable t = born_probabilities(states, povm);
        CHECK(std::abs(t.prob(1, 1)) <= 1e-12);  // E_1 never fires on |psi_2>
        CHECK(std::abs(t.prob(2, 0)) <= 1e-12);  // E_2 never fires on |psi_1>
    }
    SUBCASE("rejection probability peaks at cos(theta)") {
        const double theta = kPi / 8;
        const BornTable t = born_probabilities(StatePair(theta), PovmFamily::usd(StatePair(theta)));
        CHECK(std::abs(t.prob(0, 0) - std::cos(theta)) <= 1e-12);
        CHECK(std::abs(t.prob(0, 1) - std::cos(theta)) <= 1e-12);
    }
}

TEST_CASE("Born values at the reference point") {
    const double theta = kPi / 8;
    const double phi_star = optimal_angle(theta, 0.3);
    const BornTable t = born_probabilities(StatePair(theta), PovmFamily(phi_star));
    CHECK(std::abs(t.prob(0, 0) - 0.724) <= 1e-3);
    CHECK(std::abs(t.prob(0, 1) - 0.724) <= 1e-3);
}

TEST_CASE("orthogonal states discriminate perfectly under Helstrom") {
    const BornTable t = born_probabilities(StatePair(kHalfPi), PovmFamily::helstrom());
    CHECK(t.prob(1, 0) == 1.0);
    CHECK(t.prob(2, 0) == 0.0);
    CHECK(t.prob(2, 1) == 1.0);
    CHECK(t.prob(1, 1) == 0.0);
}

TEST_CASE("closed-form eigenvalues solve the characteristic equation") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int it = 0; it < 200; ++it) {
        const double a = u(rng);
        const double b = u(rng);
        const double c = u(rng);
        const RealMatrix2 m{a, b, b, c};
        const double lam = m.min_eigenvalue();
        CHECK(std::abs((a - lam) * (c - lam) - b * b) <= 1e-12);
        // it is the smaller root
        const double trace = a + c;
        CHECK(lam <= trace - lam + 1e-12);
    }
}

TEST_CASE("likelihood bridge preserves the Born numbers") {
    const double theta = 0.7;
    const BornTable t = born_probabilities(StatePair(theta), PovmFamily(0.5));
    const LikelihoodTable lik = t.likelihoods();
    REQUIRE(lik.outcomes() == 3);
    REQUIRE(lik.hypotheses() == 2);
    for (int d = 0; d < 3; ++d) {
        for (int h = 0; h < 2; ++h) {
            CHECK(lik.at(static_cast<std::size_t>(d), static_cast<std::size_t>(h)) == t.prob(d, h));
        }
    }
}
