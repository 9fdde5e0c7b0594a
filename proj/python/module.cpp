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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsd/decision.hpp"
#include "qsd/qubit.hpp"
#include "qsd/risk.hpp"
#include "qsd/simulate.hpp"
#include "qsd/tradeoff.hpp"

namespace py = pybind11;

namespace {

std::vector<std::vector<double>> matrix_entries(const qsd::RealMatrix2 &m) {
    return {{m.m00, m.m01}, {m.m10, m.m11}};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Optimal decision rules, measurements and expected risk for binary quantum state\n"
        "discrimination with a costed reject option, plus seeded Monte Carlo validation.";
    m.attr("__version__") = "0.1.0";

    // --- decision layer -----------------------------------------------------
    py::class_<qsd::LossMatrix>(m, "LossMatrix")
        .def_static("zero_one_lambda", &qsd::LossMatrix::zero_one_lambda, py::arg("lam"),
                    "Binary loss: correct 0, wrong 1, reject lam.")
        .def_static("error_reject", &qsd::LossMatrix::error_reject, py::arg("lambda_e"),
                    py::arg("lambda_r"), "Binary loss: correct 0, wrong lambda_e, reject lambda_r.")
        .def_static(
            "general",
            [](const std::vector<std::vector<double>> &cost) { return qsd::LossMatrix::general(cost); },
            py::arg("cost"), "Arbitrary (n+1) x n cost matrix, reject row first.")
        .def("cost", &qsd::LossMatrix::cost, py::arg("decision"), py::arg("hypothesis"))
        .def("scaled", &qsd::LossMatrix::scaled, py::arg("c"))
        .def("chow_ordered", &qsd::LossMatrix::chow_ordered)
        .def_property_readonly("hypotheses", &qsd::LossMatrix::hypotheses);

    m.def(
        "posterior",
        [](const std::vector<double> &prior, const std::vector<double> &likelihood_column) {
            return qsd::posterior(qsd::Prior(prior), likelihood_column).weights();
        },
        py::arg("prior"), py::arg("likelihood_column"),
        "Bayes update for one observed outcome; raises ValueError on zero evidence.");
    m.def(
        "conditional_risk",
        [](const qsd::LossMatrix &loss, const std::vector<double> &post, int decision) {
            return qsd::conditional_risk(loss, qsd::Posterior(post), qsd::Decision(decision));
        },
        py::arg("loss"), py::arg("posterior"), py::arg("decision"),
        "Posterior-expected loss of a decision (0 rejects, d >= 1 reports hypothesis d-1).");
    m.def(
        "optimal_decision",
        [](const qsd::LossMatrix &loss, const std::vector<double> &post) {
            return qsd::optimal_decision(loss, qsd::Posterior(post)).index();
        },
        py::arg("loss"), py::arg("posterior"),
        "Decision index minimizing the conditional risk (lowest-index tie break).");
    m.def(
        "total_risk",
        [](const qsd::LossMatrix &loss, const std::vector<double> &prior,
           const std::vector<std::vector<double>> &likelihood, const std::vector<int> &rule) {
            std::vector<qsd::Decision> decisions;
            decisions.reserve(rule.size());
            for (int d : rule) {
                decisions.emplace_back(d);
            }
            return qsd::total_risk(loss, qsd::Prior(prior), qsd::LikelihoodTable(likelihood),
                                   qsd::DecisionRule(decisions));
        },
        py::arg("loss"), py::arg("prior"), py::arg("likelihood"), py::arg("rule"),
        "Average loss of a per-outcome decision rule.");
    m.def(
        "optimal_rule",
        [](const qsd::LossMatrix &loss, const std::vector<double> &prior,
           const std::vector<std::vector<double>> &likelihood) {
            const qsd::DecisionRule rule =
                qsd::optimal_rule(loss, qsd::Prior(prior), qsd::LikelihoodTable(likelihood));
            std::vector<int> out;
            out.reserve(rule.outcomes());
            for (const qsd::Decision &d : rule.decisions()) {
                out.push_back(d.index());
            }
            return out;
        },
        py::arg("loss"), py::arg("prior"), py::arg("likelihood"),
        "Per-outcome optimal decisions (0 rejects).");

    // --- quantum layer -------------------------------------------------------
    m.def(
        "povm_elements",
        [](double phi) {
            const qsd::PovmFamily povm(phi);
            return std::vector<std::vector<std::vector<double>>>{
                matrix_entries(povm.element(0)), matrix_entries(povm.element(1)),
                matrix_entries(povm.element(2))};
        },
        py::arg("phi"), "The three POVM elements [E0, E1, E2] as 2x2 matrices.");
    m.def(
        "born_probabilities",
        [](double theta, double phi) {
            const qsd::BornTable t =
                qsd::born_probabilities(qsd::StatePair(theta), qsd::PovmFamily(phi));
            return std::vector<std::vector<double>>{
                {t.prob(0, 0), t.prob(1, 0), t.prob(2, 0)},
                {t.prob(0, 1), t.prob(1, 1), t.prob(2, 1)}};
        },
        py::arg("theta"), py::arg("phi"),
        "Rows per hypothesis of Pr(E_D | hypothesis) for D = 0, 1, 2.");

    // --- risk layer ------------------------------------------------------------
    m.def("analytic_risk", &qsd::analytic_risk, py::arg("theta"), py::arg("lam"), py::arg("phi"),
          "Expected 0-1-lambda loss of the optimal rule at measurement angle phi.");
    m.def("optimal_angle", &qsd::optimal_angle, py::arg("theta"), py::arg("lam"),
          "Risk-minimizing measurement angle.");
    m.def("helstrom_boundary", &qsd::helstrom_boundary, py::arg("theta"),
          "Reject cost above which the Helstrom measurement is optimal.");
    m.def("grid_search_optimal_angle", &qsd::grid_search_optimal_angle, py::arg("theta"),
          py::arg("lam"), py::arg("resolution") = 10000,
          "Grid-search argmin of analytic_risk over phi.");
    m.def("generalized_risk", &qsd::generalized_risk, py::arg("theta"), py::arg("lambda_e"),
          py::arg("lambda_r"), py::arg("phi"),
          "Expected 0-lambdaE-lambdaR loss of the optimal rule at angle phi.");
    m.def("generalized_grid_search_optimal_angle", &qsd::generalized_grid_search_optimal_angle,
          py::arg("theta"), py::arg("lambda_e"), py::arg("lambda_r"), py::arg("resolution") = 10000);

    // --- tradeoff layer -----------------------------------------------------------
    py::class_<qsd::OutcomeProbabilities>(m, "OutcomeProbabilities")
        .def_readonly("theta", &qsd::OutcomeProbabilities::theta)
        .def_readonly("lam", &qsd::OutcomeProbabilities::lambda)
        .def_readonly("p_correct", &qsd::OutcomeProbabilities::p_correct)
        .def_readonly("p_error", &qsd::OutcomeProbabilities::p_error)
        .def_readonly("p_reject", &qsd::OutcomeProbabilities::p_reject)
        .def_readonly("p_accept", &qsd::OutcomeProbabilities::p_accept)
        .def("__repr__", [](const qsd::OutcomeProbabilities &p) {
            return "OutcomeProbabilities(p_correct=" + std::to_string(p.p_correct) +
                   ", p_error=" + std::to_string(p.p_error) +
                   ", p_reject=" + std::to_string(p.p_reject) + ")";
        });
    m.def("outcome_probabilities", &qsd::outcome_probabilities, py::arg("theta"), py::arg("lam"),
          "Correct/error/reject/accept probabilities at the optimal angle.");
    m.def("chow_identity_risk", &qsd::chow_identity_risk, py::arg("theta"), py::arg("lam"),
          "p_error + lam * p_reject; equals the closed-form optimal risk.");
    m.def("risk_from_reject_integral", &qsd::risk_from_reject_integral, py::arg("theta"),
          py::arg("lam"), py::arg("step") = 1e-5,
          "Optimal risk as the area under the reject curve.");
    m.def("error_from_reject_integral", &qsd::error_from_reject_integral, py::arg("theta"),
          py::arg("lam"), py::arg("step") = 1e-5,
          "Error probability recovered from the reject curve.");
    m.def(
        "tradeoff_curve",
        [](double theta, const std::vector<double> &lambdas) {
            const qsd::TradeoffCurve curve = qsd::tradeoff_curve(theta, lambdas);
            std::vector<std::tuple<double, double, double>> out;
            out.reserve(curve.points.size());
            for (const auto &p : curve.points) {
                out.emplace_back(p.lambda, p.p_reject, p.p_error);
            }
            return out;
        },
        py::arg("theta"), py::arg("lambdas"),
        "List of (lambda, p_reject, p_error) samples for a fixed theta.");
    m.def("lambda_from_reject_probability", &qsd::lambda_from_reject_probability, py::arg("theta"),
          py::arg("target"), "The lambda at which p_reject equals the target.");

    // --- simulation ------------------------------------------------------------------
    py::class_<qsd::SimulationReport>(m, "SimulationReport")
        .def_readonly("empirical_risk", &qsd::SimulationReport::empirical_risk)
        .def_readonly("std_error", &qsd::SimulationReport::std_error)
        .def_readonly("trials", &qsd::SimulationReport::trials)
        .def_readonly("seed", &qsd::SimulationReport::seed)
        .def_readonly("n_correct", &qsd::SimulationReport::n_correct)
        .def_readonly("n_error", &qsd::SimulationReport::n_error)
        .def_readonly("n_reject", &qsd::SimulationReport::n_reject)
        .def_readonly("freq_correct", &qsd::SimulationReport::freq_correct)
        .def_readonly("freq_error", &qsd::SimulationReport::freq_error)
        .def_readonly("freq_reject", &qsd::SimulationReport::freq_reject)
        .def("__repr__", [](const qsd::SimulationReport &r) {
            return "SimulationReport(empirical_risk=" + std::to_string(r.empirical_risk) +
                   ", std_error=" + std::to_string(r.std_error) +
                   ", trials=" + std::to_string(r.trials) + ")";
        });

    m.def(
        "simulate_game",
        [](double theta, const qsd::LossMatrix &loss, double phi, std::uint64_t trials,
           std::uint64_t seed, unsigned threads) {
            const qsd::Prior prior({0.5, 0.5});
            const qsd::LikelihoodTable likelihood =
                qsd::born_probabilities(qsd::StatePair(theta), qsd::PovmFamily(phi)).likelihoods();
            const qsd::GameConfig config{theta, loss, phi,
                                         qsd::optimal_rule(loss, prior, likelihood), trials, seed};
            return qsd::simulate_game(config, threads);
        },
        py::arg("theta"), py::arg("loss"), py::arg("phi"), py::arg("trials"), py::arg("seed"),
        py::arg("threads") = 1,
        "Simulates the discrimination game under the optimal rule for the given loss.");

    py::class_<qsd::RiskValidationRow>(m, "RiskValidationRow")
        .def_readonly("lam", &qsd::RiskValidationRow::lambda)
        .def_readonly("phi_star", &qsd::RiskValidationRow::phi_star)
        .def_readonly("analytic_risk", &qsd::RiskValidationRow::analytic_risk)
        .def_readonly("empirical_risk", &qsd::RiskValidationRow::empirical_risk)
        .def_readonly("std_error", &qsd::RiskValidationRow::std_error)
        .def_readonly("z", &qsd::RiskValidationRow::z)
        .def_readonly("flagged", &qsd::RiskValidationRow::flagged);
    m.def("validate_risk_surface", &qsd::validate_risk_surface, py::arg("theta"),
          py::arg("lambdas"), py::arg("trials_per_point"), py::arg("seed"),
          "Analytic vs empirical risk at phi*(lambda) for each lambda; flags |z| > 4.");
}
