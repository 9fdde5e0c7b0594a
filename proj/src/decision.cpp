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

#include "qsd/decision.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qsd {

namespace {

void check_probability_vector(const std::vector<double> &weights, const char *what) {
    if (weights.empty()) {
        throw std::invalid_argument(std::string(what) + ": empty probability vector");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) {
            throw std::invalid_argument(std::string(what) + ": weights must be finite and nonnegative");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > kProbTolerance) {
        throw std::invalid_argument(std::string(what) + ": weights must sum to 1 (got " +
                                    std::to_string(sum) + ")");
    }
}

}  // namespace

Prior::Prior(std::vector<double> weights) : weights_(std::move(weights)) {
    check_probability_vector(weights_, "Prior");
}

Posterior::Posterior(std::vector<double> weights) : weights_(std::move(weights)) {
    check_probability_vector(weights_, "Posterior");
}

LikelihoodTable::LikelihoodTable(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {
    if (rows_.empty() || rows_.front().empty()) {
        throw std::invalid_argument("LikelihoodTable: needs at least one outcome and one hypothesis");
    }
    const std::size_t n = rows_.front().size();
    for (auto &row : rows_) {
        if (row.size() != n) {
            throw std::invalid_argument("LikelihoodTable: ragged rows");
        }
        for (double &p : row) {
            if (!std::isfinite(p) || p < -kProbTolerance || p > 1.0 + kProbTolerance) {
                throw std::invalid_argument("LikelihoodTable: entries must lie in [0, 1]");
            }
            p = std::clamp(p, 0.0, 1.0);
        }
    }
    for (std::size_t h = 0; h < n; ++h) {
        double sum = 0.0;
        for (const auto &row : rows_) {
            sum += row[h];
        }
        if (std::abs(sum - 1.0) > kProbTolerance) {
            throw std::invalid_argument("LikelihoodTable: outcome probabilities for hypothesis " +
                                        std::to_string(h) + " sum to " + std::to_string(sum));
        }
    }
}

Decision::Decision(int index) : index_(index) {
    if (index < 0) {
        throw std::invalid_argument("Decision: index must be >= 0 (0 rejects)");
    }
}

LossMatrix LossMatrix::zero_one_lambda(double lambda) { return error_reject(1.0, lambda); }

LossMatrix LossMatrix::error_reject(double lambda_e, double lambda_r) {
    if (!std::isfinite(lambda_e) || lambda_e < 0.0 || !std::isfinite(lambda_r) || lambda_r < 0.0) {
        throw std::invalid_argument("LossMatrix: costs must be finite and nonnegative");
    }
    LossMatrix m;
    m.cost_ = {{lambda_r, lambda_r}, {0.0, lambda_e}, {lambda_e, 0.0}};
    m.tagged_ = true;
    m.lambda_e_ = lambda_e;
    m.lambda_r_ = lambda_r;
    m.threshold_ = lambda_e > 0.0 ? 1.0 - lambda_r / lambda_e : -std::numeric_limits<double>::infinity();
    return m;
}

LossMatrix LossMatrix::general(std::vector<std::vector<double>> cost) {
    if (cost.size() < 2 || cost.front().empty()) {
        throw std::invalid_argument("LossMatrix: need a reject row plus one row per hypothesis");
    }
    const std::size_t n = cost.size() - 1;
    for (const auto &row : cost) {
        if (row.size() != n) {
            throw std::invalid_argument("LossMatrix: must be (n+1) x n");
        }
        for (double v : row) {
            if (!std::isfinite(v) || v < 0.0) {
                throw std::invalid_argument("LossMatrix: entries must be finite and nonnegative");
            }
        }
    }
    LossMatrix m;
    m.cost_ = std::move(cost);
    return m;
}

double LossMatrix::cost(int decision, int hypothesis) const {
    if (decision < 0 || static_cast<std::size_t>(decision) >= cost_.size() || hypothesis < 0 ||
        static_cast<std::size_t>(hypothesis) >= hypotheses()) {
        throw std::invalid_argument("LossMatrix: index out of range");
    }
    return cost_[static_cast<std::size_t>(decision)][static_cast<std::size_t>(hypothesis)];
}

bool LossMatrix::chow_ordered() const {
    const std::size_t n = hypotheses();
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i - 1 == j) {
                continue;
            }
            const double correct = cost_[i][i - 1];
            const double reject = cost_[0][j];
            const double wrong = cost_[i][j];
            if (!(correct < reject && reject < wrong)) {
                return false;
            }
        }
    }
    return true;
}

LossMatrix LossMatrix::scaled(double c) const {
    if (!std::isfinite(c) || c <= 0.0) {
        throw std::invalid_argument("LossMatrix::scaled: factor must be positive");
    }
    LossMatrix m(*this);
    for (auto &row : m.cost_) {
        for (double &v : row) {
            v *= c;
        }
    }
    m.lambda_e_ *= c;
    m.lambda_r_ *= c;
    // threshold_ intentionally untouched: the argmin is scale invariant.
    return m;
}

Decision TieBreakPolicy::pick(const std::vector<int> &minimizers) {
    if (minimizers.empty()) {
        throw std::invalid_argument("TieBreakPolicy: no candidates");
    }
    std::vector<int> reportable;
    reportable.reserve(minimizers.size());
    for (int d : minimizers) {
        if (d != 0) {
            reportable.push_back(d);
        }
    }
    if (reportable.empty()) {
        return Decision::reject();
    }
    if (!random_ || reportable.size() == 1) {
        return Decision(reportable.front());
    }
    std::uniform_int_distribution<std::size_t> dist(0, reportable.size() - 1);
    return Decision(reportable[dist(rng_)]);
}

DecisionRule::DecisionRule(std::vector<Decision> per_outcome) : map_(std::move(per_outcome)) {
    if (map_.empty()) {
        throw std::invalid_argument("DecisionRule: needs at least one outcome");
    }
}

DecisionRule DecisionRule::always(Decision d, std::size_t outcomes) {
    return DecisionRule(std::vector<Decision>(outcomes, d));
}

Decision DecisionRule::at(std::size_t outcome) const {
    if (outcome >= map_.size()) {
        throw std::invalid_argument("DecisionRule: no decision defined for outcome " +
                                    std::to_string(outcome));
    }
    return map_[outcome];
}

Posterior posterior(const Prior &prior, const std::vector<double> &likelihood_column) {
    if (likelihood_column.size() != prior.size()) {
        throw std::invalid_argument("posterior: likelihood column size does not match the prior");
    }
    std::vector<double> joint(prior.size());
    double evidence = 0.0;
    for (std::size_t h = 0; h < prior.size(); ++h) {
        const double lik = likelihood_column[h];
        if (!std::isfinite(lik) || lik < 0.0) {
            throw std::invalid_argument("posterior: likelihoods must be finite and nonnegative");
        }
        joint[h] = lik * prior.weight(h);
        evidence += joint[h];
    }
    if (evidence <= 0.0) {
        throw std::domain_error("posterior: outcome has zero probability under every hypothesis");
    }
    for (double &w : joint) {
        w /= evidence;
    }
    return Posterior(std::move(joint));
}

double conditional_risk(const LossMatrix &loss, const Posterior &post, Decision decision) {
    if (loss.hypotheses() != post.size()) {
        throw std::invalid_argument("conditional_risk: loss matrix does not match the posterior");
    }
    if (static_cast<std::size_t>(decision.index()) >= loss.decisions()) {
        throw std::invalid_argument("conditional_risk: decision out of range");
    }
    double risk = 0.0;
    for (std::size_t h = 0; h < post.size(); ++h) {
        risk += loss.cost(decision.index(), static_cast<int>(h)) * post.weight(h);
    }
    return risk;
}

namespace {

Decision optimal_decision_impl(const LossMatrix &loss, const Posterior &post, TieBreakPolicy &ties) {
    if (loss.hypotheses() != post.size()) {
        throw std::invalid_argument("optimal_decision: loss matrix does not match the posterior");
    }

    // Named binary families: apply the threshold form of the rule so the
    // ">= threshold" boundary is exact instead of at the mercy of rounding
    // in the dot products.
    if (loss.has_reject_threshold() && post.size() == 2) {
        const double p1 = post.weight(0);
        const double p2 = post.weight(1);
        if (p1 == p2) {
            if (p1 >= loss.reject_threshold()) {
                return ties.pick({1, 2});
            }
            return Decision::reject();
        }
        const int best = p1 > p2 ? 1 : 2;
        const double p_best = std::max(p1, p2);
        return p_best >= loss.reject_threshold() ? Decision(best) : Decision::reject();
    }

    double best = std::numeric_limits<double>::infinity();
    std::vector<int> minimizers;
    for (std::size_t d = 0; d < loss.decisions(); ++d) {
        const double risk = conditional_risk(loss, post, Decision(static_cast<int>(d)));
        if (risk < best) {
            best = risk;
            minimizers.clear();
        }
        if (risk == best) {
            minimizers.push_back(static_cast<int>(d));
        }
    }
    return ties.pick(minimizers);
}

}  // namespace

Decision optimal_decision(const LossMatrix &loss, const Posterior &post) {
    TieBreakPolicy ties = TieBreakPolicy::lowest_index();
    return optimal_decision_impl(loss, post, ties);
}

Decision optimal_decision(const LossMatrix &loss, const Posterior &post, TieBreakPolicy &ties) {
    return optimal_decision_impl(loss, post, ties);
}

namespace {

DecisionRule optimal_rule_impl(const LossMatrix &loss, const Prior &prior,
                               const LikelihoodTable &likelihood, TieBreakPolicy &ties) {
    if (likelihood.hypotheses() != prior.size() || loss.hypotheses() != prior.size()) {
        throw std::invalid_argument("optimal_rule: inconsistent dimensions");
    }
    std::vector<Decision> decisions;
    decisions.reserve(likelihood.outcomes());
    for (std::size_t d = 0; d < likelihood.outcomes(); ++d) {
        const auto &column = likelihood.column(d);
        double evidence = 0.0;
        for (std::size_t h = 0; h < prior.size(); ++h) {
            evidence += column[h] * prior.weight(h);
        }
        if (evidence > 0.0) {
            decisions.push_back(optimal_decision_impl(loss, posterior(prior, column), ties));
        } else {
            decisions.push_back(Decision::reject());  // outcome never occurs
        }
    }
    return DecisionRule(std::move(decisions));
}

}  // namespace

DecisionRule optimal_rule(const LossMatrix &loss, const Prior &prior, const LikelihoodTable &likelihood) {
    TieBreakPolicy ties = TieBreakPolicy::lowest_index();
    return optimal_rule_impl(loss, prior, likelihood, ties);
}

DecisionRule optimal_rule(const LossMatrix &loss, const Prior &prior, const LikelihoodTable &likelihood,
                          TieBreakPolicy &ties) {
    return optimal_rule_impl(loss, prior, likelihood, ties);
}

double total_risk(const LossMatrix &loss, const Prior &prior, const LikelihoodTable &likelihood,
                  const DecisionRule &rule) {
    if (likelihood.hypotheses() != prior.size() || loss.hypotheses() != prior.size()) {
        throw std::invalid_argument("total_risk: inconsistent dimensions");
    }
    if (rule.outcomes() != likelihood.outcomes()) {
        throw std::invalid_argument("total_risk: rule does not cover every outcome");
    }
    double risk = 0.0;
    for (std::size_t d = 0; d < likelihood.outcomes(); ++d) {
        const Decision decision = rule.at(d);
        if (static_cast<std::size_t>(decision.index()) >= loss.decisions()) {
            throw std::invalid_argument("total_risk: rule decision out of range for the loss matrix");
        }
        for (std::size_t h = 0; h < prior.size(); ++h) {
            risk += loss.cost(decision.index(), static_cast<int>(h)) * likelihood.at(d, h) *
                    prior.weight(h);
        }
    }
    return risk;
}

}  // namespace qsd
