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
 * @file decision.hpp
 * Bayesian decision theory over a finite set of hypotheses with an explicit
 * reject option.
 *
 * Conventions used throughout:
 *  - hypotheses are 0-based: h in {0, ..., n-1};
 *  - decisions are 0-based with 0 reserved for "reject": decision d in
 *    {0, ..., n}, where d >= 1 reports hypothesis d-1;
 *  - probabilities are validated to 1e-12.
 *
 * All functions are pure; values are immutable after construction and safe
 * to share between threads. The only stateful object is TieBreakPolicy in
 * its seeded-random mode.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace qsd {

/// Tolerance used when validating that probability vectors are normalized.
inline constexpr double kProbTolerance = 1e-12;

/// Prior probabilities over n hypotheses. Weights must be nonnegative and
/// sum to 1 within kProbTolerance.
class Prior {
  public:
    explicit Prior(std::vector<double> weights);

    std::size_t size() const { return weights_.size(); }
    double weight(std::size_t hypothesis) const { return weights_[hypothesis]; }
    const std::vector<double> &weights() const { return weights_; }

  private:
    std::vector<double> weights_;
};

/// Posterior probabilities over n hypotheses; same validation as Prior.
class Posterior {
  public:
    explicit Posterior(std::vector<double> weights);

    std::size_t size() const { return weights_.size(); }
    double weight(std::size_t hypothesis) const { return weights_[hypothesis]; }
    const std::vector<double> &weights() const { return weights_; }

  private:
    std::vector<double> weights_;
};

/// Conditional outcome probabilities Pr(D | hypothesis), stored one row per
/// outcome D and one column per hypothesis. Every column must sum to 1
/// within kProbTolerance. Entries within kProbTolerance of [0, 1] are
/// clamped onto the interval so downstream arithmetic never sees a
/// negative probability.
class LikelihoodTable {
  public:
    explicit LikelihoodTable(std::vector<std::vector<double>> rows);

    std::size_t outcomes() const { return rows_.size(); }
    std::size_t hypotheses() const { return rows_.empty() ? 0 : rows_.front().size(); }
    double at(std::size_t outcome, std::size_t hypothesis) const {
        return rows_[outcome][hypothesis];
    }
    /// Likelihoods of one fixed outcome under every hypothesis.
    const std::vector<double> &column(std::size_t outcome) const { return rows_[outcome]; }

  private:
    std::vector<std::vector<double>> rows_;
};

/// A decision: 0 rejects, d >= 1 reports hypothesis d-1.
class Decision {
  public:
    explicit Decision(int index);
    static Decision reject() { return Decision(0); }
    static Decision report(int hypothesis) { return Decision(hypothesis + 1); }

    int index() const { return index_; }
    bool is_reject() const { return index_ == 0; }
    /// 0-based hypothesis reported; only meaningful when !is_reject().
    int hypothesis() const { return index_ - 1; }

    friend bool operator==(Decision a, Decision b) { return a.index_ == b.index_; }
    friend bool operator!=(Decision a, Decision b) { return a.index_ != b.index_; }

  private:
    int index_;
};

/**
 * Loss matrix: cost(d, h) is the loss of decision d when hypothesis h is
 * true, with d = 0 the reject row. Entries must be nonnegative and finite.
 *
 * The two named binary families carry their reject threshold with them:
 * for them the optimal decision reduces to "report the largest posterior
 * when it reaches 1 - reject_cost/error_cost, otherwise reject", and
 * optimal_decision() evaluates exactly that comparison so decisions at the
 * threshold follow the >= rule instead of depending on rounding inside a
 * dot product. Scaling a tagged matrix preserves the stored threshold.
 */
class LossMatrix {
  public:
    /// Binary loss: correct 0, wrong 1, reject lambda.
    static LossMatrix zero_one_lambda(double lambda);
    /// Binary loss: correct 0, wrong lambda_e, reject lambda_r.
    static LossMatrix error_reject(double lambda_e, double lambda_r);
    /// Arbitrary (n+1) x n cost matrix, reject row first.
    static LossMatrix general(std::vector<std::vector<double>> cost);

    std::size_t hypotheses() const { return cost_.empty() ? 0 : cost_.front().size(); }
    std::size_t decisions() const { return cost_.size(); }  // hypotheses() + 1
    double cost(int decision, int hypothesis) const;

    /// True when cost(i,i) < cost(0,j) < cost(i,j) for all reportable i != j.
    bool chow_ordered() const;

    /// Entrywise multiple by c > 0. Keeps the binary-family tag (and its
    /// exact threshold): scaling a loss never changes which decision is
    /// optimal.
    LossMatrix scaled(double c) const;

    bool has_reject_threshold() const { return tagged_; }
    /// Posterior threshold 1 - lambda_r/lambda_e for the tagged families
    /// (-infinity when lambda_e == 0: errors are free, never reject).
    double reject_threshold() const { return threshold_; }
    double error_cost() const { return lambda_e_; }
    double reject_cost() const { return lambda_r_; }

  private:
    LossMatrix() = default;

    std::vector<std::vector<double>> cost_;
    bool tagged_ = false;
    double threshold_ = 0.0;
    double lambda_e_ = 0.0;
    double lambda_r_ = 0.0;
};

/**
 * Resolves exact ties between decisions of equal conditional risk.
 *
 * lowest_index() deterministically picks the smallest-index reportable
 * decision among the minimizers, falling back to reject only when reject is
 * the unique minimizer. seeded_random(seed) picks uniformly among the
 * reportable minimizers instead. Either choice carries the same risk; the
 * policy only decides which label is emitted. The seeded policy holds RNG
 * state, so share one instance per thread, not across threads.
 */
class TieBreakPolicy {
  public:
    static TieBreakPolicy lowest_index() { return TieBreakPolicy(false, 0); }
    static TieBreakPolicy seeded_random(std::uint64_t seed) { return TieBreakPolicy(true, seed); }

    /// minimizers: ascending decision indices with equal (minimal) risk.
    Decision pick(const std::vector<int> &minimizers);

  private:
    TieBreakPolicy(bool random, std::uint64_t seed) : random_(random), rng_(seed) {}

    bool random_;
    std::mt19937_64 rng_;
};

/// Deterministic map from outcome index to Decision, one entry per outcome.
class DecisionRule {
  public:
    explicit DecisionRule(std::vector<Decision> per_outcome);
    static DecisionRule always(Decision d, std::size_t outcomes);

    std::size_t outcomes() const { return map_.size(); }
    Decision at(std::size_t outcome) const;
    const std::vector<Decision> &decisions() const { return map_; }

  private:
    std::vector<Decision> map_;
};

/// Bayes update for one observed outcome. likelihood_column holds
/// Pr(D | h) for the fixed outcome D under every hypothesis h. Throws
/// std::domain_error when the outcome is impossible under every hypothesis
/// (zero evidence), where the posterior is undefined.
Posterior posterior(const Prior &prior, const std::vector<double> &likelihood_column);

/// Posterior-expected loss of `decision` given the observed outcome.
double conditional_risk(const LossMatrix &loss, const Posterior &post, Decision decision);

/// The decision minimizing conditional risk; exact ties resolved by the
/// policy (lowest-index by default).
Decision optimal_decision(const LossMatrix &loss, const Posterior &post);
Decision optimal_decision(const LossMatrix &loss, const Posterior &post, TieBreakPolicy &ties);

/// Per-outcome optimal decisions for a whole experiment. Outcomes with zero
/// evidence are unreachable, so they are mapped to reject; any choice there
/// leaves the total risk unchanged.
DecisionRule optimal_rule(const LossMatrix &loss, const Prior &prior, const LikelihoodTable &likelihood);
DecisionRule optimal_rule(const LossMatrix &loss, const Prior &prior, const LikelihoodTable &likelihood,
                          TieBreakPolicy &ties);

/// Average loss of `rule`: sum over outcomes D and hypotheses h of
/// cost(rule(D), h) * Pr(D|h) * Pr(h). This is the exhaustive route used to
/// cross-check every closed-form risk in the package.
double total_risk(const LossMatrix &loss, const Prior &prior, const LikelihoodTable &likelihood,
                  const DecisionRule &rule);

}  // namespace qsd
