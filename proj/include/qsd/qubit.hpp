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
 * @file qubit.hpp
 * The quantum layer: a symmetric pair of pure qubit states separated by
 * angle theta, a one-parameter family of three-outcome POVMs, and Born-rule
 * outcome probabilities.
 *
 * Everything here is real-valued: the states and all measurement operators
 * live in the x-z plane, so 2x2 real symmetric matrices suffice and
 * eigenvalues come from the closed-form quadratic. The layer assumes equal
 * prior probabilities for the two states; asymmetric priors are handled by
 * the generic decision layer, not here.
 */

#pragma once

#include <array>
#include <cstddef>

#include "qsd/decision.hpp"

namespace qsd {

/// 2x2 real matrix; the POVM elements and projectors used here are all
/// symmetric.
struct RealMatrix2 {
    double m00 = 0.0;
    double m01 = 0.0;
    double m10 = 0.0;
    double m11 = 0.0;

    static RealMatrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static RealMatrix2 zero() { return {0.0, 0.0, 0.0, 0.0}; }

    RealMatrix2 operator+(const RealMatrix2 &o) const {
        return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11};
    }

    bool symmetric(double tol = kProbTolerance) const;

    /// Smaller eigenvalue of a symmetric matrix, via the quadratic formula.
    double min_eigenvalue() const;

    /// Quadratic form <v|M|v> for a real vector v, evaluated symmetrically
    /// as v0^2 m00 + v0 v1 (m01 + m10) + v1^2 m11.
    double expectation(const std::array<double, 2> &v) const;
};

/// The state pair |psi_1> = (cos(theta/2), sin(theta/2)) and
/// |psi_2> = (cos(theta/2), -sin(theta/2)), theta in [0, pi/2].
/// Their overlap is cos(theta).
class StatePair {
  public:
    explicit StatePair(double theta);

    double theta() const { return theta_; }
    double overlap() const;
    /// hypothesis in {0, 1}.
    std::array<double, 2> state(int hypothesis) const;

  private:
    double theta_;
};

/**
 * Three-outcome POVM {E_0, E_1, E_2} parameterized by the measurement angle
 * phi in [0, pi/2]. With s = sin(phi/2), c = cos(phi/2):
 *
 *   E_1 = [[ s*s,  s*c], [ s*c, c*c]] / (2 c*c)
 *   E_2 = [[ s*s, -s*c], [-s*c, c*c]] / (2 c*c)
 *   E_0 = [[ 1 - s*s/(c*c), 0], [0, 0]]
 *
 * E_0 is the inconclusive outcome. At phi = pi/2 the family degenerates to
 * the two-outcome Helstrom measurement (E_0 = 0, E_1 and E_2 the |+>/|->
 * projectors); that endpoint is built exactly rather than through the
 * trigonometric formulas. For phi > pi/2 the E_0 element would have a
 * negative eigenvalue, so construction fails there.
 */
class PovmFamily {
  public:
    explicit PovmFamily(double phi);

    /// The Helstrom measurement: phi = pi/2.
    static PovmFamily helstrom();
    /// Unambiguous state discrimination for the given pair: phi = theta.
    static PovmFamily usd(const StatePair &states);

    double phi() const { return phi_; }
    /// outcome in {0, 1, 2}.
    const RealMatrix2 &element(int outcome) const { return elements_[static_cast<std::size_t>(outcome)]; }

  private:
    double phi_;
    std::array<RealMatrix2, 3> elements_;
};

/// Born-rule probabilities Pr(E_D | hypothesis) for the three outcomes and
/// two hypotheses. Values are clamped onto [0, 1] (the quadratic form can
/// land a rounding error below zero for probabilities that vanish exactly).
class BornTable {
  public:
    BornTable(const std::array<double, 3> &row_h1, const std::array<double, 3> &row_h2);

    /// hypothesis in {0, 1}, outcome in {0, 1, 2}.
    double prob(int outcome, int hypothesis) const {
        return rows_[static_cast<std::size_t>(hypothesis)][static_cast<std::size_t>(outcome)];
    }
    const std::array<double, 3> &row(int hypothesis) const {
        return rows_[static_cast<std::size_t>(hypothesis)];
    }

    /// The same numbers as a LikelihoodTable (outcome-major) for the
    /// decision layer.
    LikelihoodTable likelihoods() const;

  private:
    std::array<std::array<double, 3>, 2> rows_;
};

/// Pr(E_D | hypothesis) = <psi | E_D | psi> for all six combinations.
BornTable born_probabilities(const StatePair &states, const PovmFamily &povm);

}  // namespace qsd
