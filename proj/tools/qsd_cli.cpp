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

// qsd: command line front end. Subcommands sweep the discrimination
// parameters and emit CSV or JSON rows; `simulate` runs the seeded Monte
// Carlo game and emits a JSON report.
//
// Exit codes: 0 success, 1 I/O failure, 2 usage/domain error,
// 3 simulation validation failure (|z| > 4).
//
// Angles are radians unless --degrees is given; all output is radians.
// Sweeps are written MIN:MAX:STEPS (inclusive endpoints, STEPS >= 2); a
// bare number fixes the axis. Numbers are serialized with 17 significant
// digits so output is byte-stable and round-trip exact.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "qsd/decision.hpp"
#include "qsd/qubit.hpp"
#include "qsd/risk.hpp"
#include "qsd/simulate.hpp"
#include "qsd/tradeoff.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;

constexpr double kDegree = std::numbers::pi / 180.0;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt(std::uint64_t v) { return std::to_string(v); }
std::string fmt(int v) { return std::to_string(v); }

struct Cell {
    std::string text;
    bool quoted = false;
};

Cell num(double v) { return {fmt(v), false}; }
Cell num(int v) { return {fmt(v), false}; }
Cell num(std::uint64_t v) { return {fmt(v), false}; }
Cell str(std::string s) { return {std::move(s), true}; }

using Row = std::vector<Cell>;
using Params = std::vector<std::pair<std::string, Cell>>;

std::string json_escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    return out;
}

std::string emit_csv(const std::vector<std::string> &columns, const std::vector<Row> &rows) {
    std::string body;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i > 0) {
            body.push_back(',');
        }
        body += columns[i];
    }
    body.push_back('\n');
    for (const Row &row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                body.push_back(',');
            }
            body += row[i].text;
        }
        body.push_back('\n');
    }
    return body;
}

void append_json_value(std::string &body, const Cell &cell) {
    if (cell.quoted) {
        body.push_back('"');
        body += json_escape(cell.text);
        body.push_back('"');
    } else {
        body += cell.text;
    }
}

std::string emit_json(const Params &params, const std::vector<std::string> &columns,
                      const std::vector<Row> &rows) {
    std::string body = "{\n  \"schema_version\": 1,\n  \"params\": {";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i > 0) {
            body.push_back(',');
        }
        body += "\n    \"" + json_escape(params[i].first) + "\": ";
        append_json_value(body, params[i].second);
    }
    body += "\n  },\n  \"rows\": [";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r > 0) {
            body.push_back(',');
        }
        body += "\n    {";
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i > 0) {
                body += ", ";
            }
            body += "\"" + json_escape(columns[i]) + "\": ";
            append_json_value(body, rows[r][i]);
        }
        body.push_back('}');
    }
    body += "\n  ]\n}\n";
    return body;
}

// Computation first, output second: a file appears only after the whole
// body exists, via temp file + rename, so failed runs leave nothing behind.
int write_text(const std::string &body, const std::string &path) {
    if (path.empty()) {
        std::cout << body;
        std::cout.flush();
        return std::cout.good() ? kExitOk : kExitIo;
    }
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp(path + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            std::cerr << "error: cannot open " << tmp << " for writing\n";
            return kExitIo;
        }
        out << body;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            std::cerr << "error: failed writing " << tmp << "\n";
            return kExitIo;
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ec2;
        fs::remove(tmp, ec2);
        std::cerr << "error: cannot rename " << tmp << " to " << target << ": " << ec.message()
                  << "\n";
        return kExitIo;
    }
    return kExitOk;
}

// "x" fixes the axis; "min:max:steps" sweeps it (inclusive, steps >= 2).
qsd::GridAxis parse_axis(const std::string &spec, const char *name, bool degrees, bool is_angle) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ':')) {
        parts.push_back(token);
    }
    const double unit = (degrees && is_angle) ? kDegree : 1.0;
    try {
        if (parts.size() == 1) {
            const double v = std::stod(parts[0]) * unit;
            return qsd::GridAxis{v, v, 1};
        }
        if (parts.size() == 3) {
            const double lo = std::stod(parts[0]) * unit;
            const double hi = std::stod(parts[1]) * unit;
            const long steps = std::stol(parts[2]);
            if (steps < 2) {
                throw std::invalid_argument(std::string(name) + ": a sweep needs at least 2 steps");
            }
            if (!(lo < hi)) {
                throw std::invalid_argument(std::string(name) + ": sweep needs min < max");
            }
            return qsd::GridAxis{lo, hi, static_cast<std::size_t>(steps)};
        }
    } catch (const std::invalid_argument &) {
        throw;
    } catch (const std::exception &) {
        // fall through to the message below
    }
    throw std::invalid_argument(std::string(name) + ": expected a number or MIN:MAX:STEPS, got '" +
                                spec + "'");
}

double parse_scalar(const std::string &spec, const char *name, bool degrees, bool is_angle) {
    const qsd::GridAxis axis = parse_axis(spec, name, degrees, is_angle);
    if (axis.steps != 1) {
        throw std::invalid_argument(std::string(name) + " must be a single value here");
    }
    return axis.min;
}

std::vector<double> parse_list(const std::string &spec, const char *name, bool degrees) {
    std::vector<double> values;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ',')) {
        try {
            values.push_back(std::stod(token) * (degrees ? kDegree : 1.0));
        } catch (const std::exception &) {
            throw std::invalid_argument(std::string(name) + ": expected comma-separated numbers");
        }
    }
    if (values.empty()) {
        throw std::invalid_argument(std::string(name) + ": empty list");
    }
    return values;
}

struct OutputOptions {
    std::string format = "csv";
    std::string path;
};

void add_output_options(CLI::App *cmd, OutputOptions &out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output,-o", out.path, "Output file (default: standard output)");
}

int emit_table(const OutputOptions &out, const Params &params,
               const std::vector<std::string> &columns, const std::vector<Row> &rows) {
    const std::string body =
        out.format == "json" ? emit_json(params, columns, rows) : emit_csv(columns, rows);
    return write_text(body, out.path);
}

Params axis_params(const std::string &name, const qsd::GridAxis &axis) {
    if (axis.steps == 1) {
        return {{name, num(axis.min)}};
    }
    return {{name + "_min", num(axis.min)},
            {name + "_max", num(axis.max)},
            {name + "_steps", num(static_cast<std::uint64_t>(axis.steps))}};
}

void append_params(Params &dst, const Params &src) { dst.insert(dst.end(), src.begin(), src.end()); }

// ---------------------------------------------------------------------------

int cmd_risk_surface(double theta, const qsd::GridAxis &lambda_axis, const qsd::GridAxis &phi_axis,
                     const OutputOptions &out) {
    const std::vector<double> lambdas = lambda_axis.points();
    const std::vector<double> phis = phi_axis.points();
    std::vector<Row> rows;
    rows.reserve(lambdas.size() * phis.size());
    for (double lambda : lambdas) {
        const double phi_star = qsd::optimal_angle(theta, lambda);
        // mark the grid point that carries the optimal-angle locus
        std::ptrdiff_t star_index = -1;
        if (phi_axis.steps == 1) {
            if (std::abs(phis[0] - phi_star) <= 1e-12) {
                star_index = 0;
            }
        } else {
            const double h = phi_axis.step();
            const double k = std::round((phi_star - phi_axis.min) / h);
            if (k >= 0 && k < static_cast<double>(phi_axis.steps)) {
                const auto ki = static_cast<std::ptrdiff_t>(k);
                if (std::abs(phis[static_cast<std::size_t>(ki)] - phi_star) <= 0.5 * h + 1e-12) {
                    star_index = ki;
                }
            }
        }
        for (std::size_t k = 0; k < phis.size(); ++k) {
            const double risk = qsd::analytic_risk(theta, lambda, phis[k]);
            rows.push_back(Row{num(theta), num(lambda), num(phis[k]), num(risk),
                               num(static_cast<int>(star_index == static_cast<std::ptrdiff_t>(k)))});
        }
    }
    Params params{{"theta", num(theta)}};
    append_params(params, axis_params("lambda", lambda_axis));
    append_params(params, axis_params("phi", phi_axis));
    return emit_table(out, params, {"theta", "lambda", "phi", "risk", "is_optimal_phi"}, rows);
}

int cmd_optimal_angle(const qsd::GridAxis &theta_axis, const qsd::GridAxis &lambda_axis,
                      const OutputOptions &out) {
    std::vector<Row> rows;
    rows.reserve(theta_axis.steps * lambda_axis.steps);
    for (double theta : theta_axis.points()) {
        const double boundary = qsd::helstrom_boundary(theta);
        for (double lambda : lambda_axis.points()) {
            const double phi_star = qsd::optimal_angle(theta, lambda);
            rows.push_back(Row{num(theta), num(lambda), num(phi_star),
                               str(lambda >= boundary ? "helstrom" : "interior")});
        }
    }
    Params params;
    append_params(params, axis_params("theta", theta_axis));
    append_params(params, axis_params("lambda", lambda_axis));
    return emit_table(out, params, {"theta", "lambda", "phi_star", "branch"}, rows);
}

int cmd_probabilities(const qsd::GridAxis &theta_axis, const qsd::GridAxis &lambda_axis,
                      const OutputOptions &out) {
    std::vector<Row> rows;
    rows.reserve(theta_axis.steps * lambda_axis.steps);
    for (double theta : theta_axis.points()) {
        for (double lambda : lambda_axis.points()) {
            const qsd::OutcomeProbabilities p = qsd::outcome_probabilities(theta, lambda);
            rows.push_back(Row{num(theta), num(lambda), num(p.p_correct), num(p.p_error),
                               num(p.p_reject), num(p.p_accept)});
        }
    }
    Params params;
    append_params(params, axis_params("theta", theta_axis));
    append_params(params, axis_params("lambda", lambda_axis));
    return emit_table(out, params,
                      {"theta", "lambda", "p_correct", "p_error", "p_reject", "p_accept"}, rows);
}

int cmd_tradeoff(const std::vector<double> &thetas, std::size_t steps, const OutputOptions &out) {
    if (steps < 2) {
        throw std::invalid_argument("--steps must be >= 2");
    }
    const std::vector<double> lambdas = qsd::GridAxis{0.0, 0.5, steps}.points();
    std::vector<Row> rows;
    rows.reserve(thetas.size() * steps);
    for (double theta : thetas) {
        const qsd::TradeoffCurve curve = qsd::tradeoff_curve(theta, lambdas);
        for (const qsd::TradeoffPoint &pt : curve.points) {
            rows.push_back(Row{num(theta), num(pt.lambda), num(pt.p_reject), num(pt.p_error)});
        }
    }
    Params params{{"lambda_steps", num(static_cast<std::uint64_t>(steps))}};
    return emit_table(out, params, {"theta", "lambda", "p_reject", "p_error"}, rows);
}

int cmd_regions_zero_one_lambda(double theta, const qsd::GridAxis &lambda_axis,
                                const qsd::GridAxis &phi_axis, const OutputOptions &out) {
    const qsd::DecisionRegionMap map =
        qsd::decision_region_map_zero_one_lambda(theta, lambda_axis, phi_axis);
    std::vector<Row> rows;
    rows.reserve(map.cells.size());
    for (const qsd::RegionCell &cell : map.cells) {
        rows.push_back(Row{num(theta), num(cell.cost), num(cell.phi), num(cell.decision[0]),
                           num(cell.decision[1]), num(cell.decision[2])});
    }
    Params params{{"theta", num(theta)}, {"loss", str("zero-one-lambda")}};
    append_params(params, axis_params("lambda", lambda_axis));
    append_params(params, axis_params("phi", phi_axis));
    return emit_table(
        out, params,
        {"theta", "lambda", "phi", "decision_e0", "decision_e1", "decision_e2"}, rows);
}

int cmd_regions_error_reject(double theta, double lambda_r, const qsd::GridAxis &lambda_e_axis,
                             const qsd::GridAxis &phi_axis, const OutputOptions &out) {
    const qsd::DecisionRegionMap map =
        qsd::decision_region_map_error_reject(theta, lambda_r, lambda_e_axis, phi_axis);
    std::vector<Row> rows;
    rows.reserve(map.cells.size());
    for (const qsd::RegionCell &cell : map.cells) {
        rows.push_back(Row{num(theta), num(lambda_r), num(cell.cost), num(cell.phi),
                           num(cell.decision[0]), num(cell.decision[1]), num(cell.decision[2])});
    }
    Params params{{"theta", num(theta)}, {"loss", str("error-reject")}, {"lambda_r", num(lambda_r)}};
    append_params(params, axis_params("lambda_e", lambda_e_axis));
    append_params(params, axis_params("phi", phi_axis));
    return emit_table(
        out, params,
        {"theta", "lambda_r", "lambda_e", "phi", "decision_e0", "decision_e1", "decision_e2"},
        rows);
}

int cmd_simulate(double theta, bool use_error_reject, double lambda, double lambda_e,
                 double lambda_r, const std::string &phi_spec, bool degrees, std::uint64_t trials,
                 std::uint64_t seed, const OutputOptions &out) {
    const qsd::LossMatrix loss = use_error_reject ? qsd::LossMatrix::error_reject(lambda_e, lambda_r)
                                                  : qsd::LossMatrix::zero_one_lambda(lambda);

    double phi = 0.0;
    if (phi_spec == "optimal") {
        phi = use_error_reject ? qsd::generalized_grid_search_optimal_angle(theta, lambda_e, lambda_r)
                               : qsd::optimal_angle(theta, lambda);
    } else {
        phi = parse_scalar(phi_spec, "--phi", degrees, true);
    }

    const double analytic = use_error_reject ? qsd::generalized_risk(theta, lambda_e, lambda_r, phi)
                                             : qsd::analytic_risk(theta, lambda, phi);

    const qsd::Prior prior({0.5, 0.5});
    const qsd::LikelihoodTable likelihood =
        qsd::born_probabilities(qsd::StatePair(theta), qsd::PovmFamily(phi)).likelihoods();
    const qsd::GameConfig config{theta, loss, phi, qsd::optimal_rule(loss, prior, likelihood),
                                 trials, seed};
    const qsd::SimulationReport report = qsd::simulate_game(config, 0);

    double z = 0.0;
    if (report.std_error > 0.0) {
        z = (report.empirical_risk - analytic) / report.std_error;
    } else if (report.empirical_risk != analytic) {
        z = report.empirical_risk > analytic ? std::numeric_limits<double>::infinity()
                                             : -std::numeric_limits<double>::infinity();
    }

    Params params{{"theta", num(theta)}};
    if (use_error_reject) {
        params.emplace_back("loss", str("error-reject"));
        params.emplace_back("lambda_e", num(lambda_e));
        params.emplace_back("lambda_r", num(lambda_r));
    } else {
        params.emplace_back("loss", str("zero-one-lambda"));
        params.emplace_back("lambda", num(lambda));
    }
    params.emplace_back("phi", num(phi));
    params.emplace_back("trials", num(report.trials));
    params.emplace_back("seed", num(report.seed));

    const std::vector<std::string> columns{
        "analytic_risk", "empirical_risk", "std_error",    "z",          "n_correct", "n_error",
        "n_reject",      "freq_correct",   "freq_error",   "freq_reject"};
    // an infinite z (zero spread, mismatching mean) has no JSON number
    const Cell z_cell = std::isfinite(z) ? num(z) : Cell{"null", false};
    const std::vector<Row> rows{Row{num(analytic), num(report.empirical_risk), num(report.std_error),
                                    z_cell, num(report.n_correct), num(report.n_error),
                                    num(report.n_reject), num(report.freq_correct),
                                    num(report.freq_error), num(report.freq_reject)}};
    const int io_rc = write_text(emit_json(params, columns, rows), out.path);
    if (io_rc != kExitOk) {
        return io_rc;
    }
    if (std::abs(z) > 4.0) {
        std::cerr << "validation failure: |z| = " << std::abs(z) << " > 4\n";
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{
        "qsd: optimal decision rules, measurements and risk for binary quantum state\n"
        "discrimination with a costed reject option"};
    app.require_subcommand(1);

    std::function<int()> run;

    // risk-surface ----------------------------------------------------------
    {
        auto *cmd = app.add_subcommand(
            "risk-surface", "Expected risk over a (lambda, phi) grid for the 0-1-lambda loss");
        auto theta = std::make_shared<std::string>();
        auto lambda = std::make_shared<std::string>("0:0.5:51");
        auto phi = std::make_shared<std::string>("0:1.5707963267948966:51");
        auto degrees = std::make_shared<bool>(false);
        auto out = std::make_shared<OutputOptions>();
        cmd->add_option("--theta", *theta, "State separation angle")->required();
        cmd->add_option("--lambda", *lambda, "Reject cost (value or MIN:MAX:STEPS)")
            ->capture_default_str();
        cmd->add_option("--phi", *phi, "Measurement angle (value or MIN:MAX:STEPS)")
            ->capture_default_str();
        cmd->add_flag("--degrees", *degrees, "Interpret input angles as degrees");
        add_output_options(cmd, *out);
        cmd->callback([=, &run] {
            run = [=] {
                return cmd_risk_surface(parse_scalar(*theta, "--theta", *degrees, true),
                                        parse_axis(*lambda, "--lambda", false, false),
                                        parse_axis(*phi, "--phi", *degrees, true), *out);
            };
        });
    }

    // optimal-angle ---------------------------------------------------------
    {
        auto *cmd = app.add_subcommand("optimal-angle",
                                       "Risk-minimizing measurement angle phi*(theta, lambda)");
        auto theta = std::make_shared<std::string>();
        auto lambda = std::make_shared<std::string>("0:0.5:51");
        auto degrees = std::make_shared<bool>(false);
        auto out = std::make_shared<OutputOptions>();
        cmd->add_option("--theta", *theta, "State separation angle (value or MIN:MAX:STEPS)")
            ->required();
        cmd->add_option("--lambda", *lambda, "Reject cost (value or MIN:MAX:STEPS)")
            ->capture_default_str();
        cmd->add_flag("--degrees", *degrees, "Interpret input angles as degrees");
        add_output_options(cmd, *out);
        cmd->callback([=, &run] {
            run = [=] {
                return cmd_optimal_angle(parse_axis(*theta, "--theta", *degrees, true),
                                         parse_axis(*lambda, "--lambda", false, false), *out);
            };
        });
    }

    // probabilities ---------------------------------------------------------
    {
        auto *cmd = app.add_subcommand(
            "probabilities",
            "Correct/error/reject/accept probabilities under the optimal strategy");
        auto theta = std::make_shared<std::string>();
        auto lambda = std::make_shared<std::string>();
        auto degrees = std::make_shared<bool>(false);
        auto out = std::make_shared<OutputOptions>();
        cmd->add_option("--theta", *theta, "State separation angle (value or MIN:MAX:STEPS)")
            ->required();
        cmd->add_option("--lambda", *lambda, "Reject cost in [0, 1/2] (value or MIN:MAX:STEPS)")
            ->required();
        cmd->add_flag("--degrees", *degrees, "Interpret input angles as degrees");
        add_output_options(cmd, *out);
        cmd->callback([=, &run] {
            run = [=] {
                return cmd_probabilities(parse_axis(*theta, "--theta", *degrees, true),
                                         parse_axis(*lambda, "--lambda", false, false), *out);
            };
        });
    }

    // tradeoff ---------------------------------------------------------------
    {
        auto *cmd = app.add_subcommand(
            "tradeoff", "Error-reject tradeoff curve sampled over lambda in [0, 1/2]");
        auto thetas = std::make_shared<std::string>();
        auto steps = std::make_shared<std::size_t>(51);
        auto degrees = std::make_shared<bool>(false);
        auto out = std::make_shared<OutputOptions>();
        cmd->add_option("--theta", *thetas, "Comma-separated list of state separation angles")
            ->required();
        cmd->add_option("--steps", *steps, "Number of lambda samples")->capture_default_str();
        cmd->add_flag("--degrees", *degrees, "Interpret input angles as degrees");
        add_output_options(cmd, *out);
        cmd->callback([=, &run] {
            run = [=] { return cmd_tradeoff(parse_list(*thetas, "--theta", *degrees), *steps, *out); };
        });
    }

    // regions -----------------------------------------------------------------
    {
        auto *cmd = app.add_subcommand(
            "regions", "Optimal decision per outcome over a (cost, phi) grid");
        auto theta = std::make_shared<std::string>();
        auto lambda = std::make_shared<std::string>();
        auto lambda_e = std::make_shared<std::string>();
        auto lambda_r = std::make_shared<std::string>();
        auto phi = std::make_shared<std::string>("0:1.5707963267948966:51");
        auto degrees = std::make_shared<bool>(false);
        auto out = std::make_shared<OutputOptions>();
        cmd->add_option("--theta", *theta, "State separation angle")->required();
        cmd->add_option("--lambda", *lambda,
                        "0-1-lambda family: reject cost (value or MIN:MAX:STEPS)");
        cmd->add_option("--lambda-e", *lambda_e,
                        "error-reject family: error cost (value or MIN:MAX:STEPS)");
        cmd->add_option("--lambda-r", *lambda_r, "error-reject family: reject cost (single value)");
        cmd->add_option("--phi", *phi, "Measurement angle (value or MIN:MAX:STEPS)")
            ->capture_default_str();
        cmd->add_flag("--degrees", *degrees, "Interpret input angles as degrees");
        add_output_options(cmd, *out);
        cmd->callback([=, &run] {
            run = [=] {
                const bool has_01 = !lambda->empty();
                const bool has_er = !lambda_e->empty() || !lambda_r->empty();
                if (has_01 == has_er) {
                    throw std::invalid_argument(
                        "regions: give either --lambda (0-1-lambda) or --lambda-e with --lambda-r "
                        "(error-reject)");
                }
                const qsd::GridAxis phi_axis = parse_axis(*phi, "--phi", *degrees, true);
                const double th = parse_scalar(*theta, "--theta", *degrees, true);
                if (has_01) {
                    return cmd_regions_zero_one_lambda(
                        th, parse_axis(*lambda, "--lambda", false, false), phi_axis, *out);
                }
                if (lambda_e->empty() || lambda_r->empty()) {
                    throw std::invalid_argument("regions: --lambda-e and --lambda-r go together");
                }
                return cmd_regions_error_reject(
                    th, parse_scalar(*lambda_r, "--lambda-r", false, false),
                    parse_axis(*lambda_e, "--lambda-e", false, false), phi_axis, *out);
            };
        });
    }

    // simulate -----------------------------------------------------------------
    {
        auto *cmd = app.add_subcommand(
            "simulate", "Seeded Monte Carlo run of the discrimination game (JSON report)");
        auto theta = std::make_shared<std::string>();
        auto lambda = std::make_shared<std::string>();
        auto lambda_e = std::make_shared<std::string>();
        auto lambda_r = std::make_shared<std::string>();
        auto phi = std::make_shared<std::string>("optimal");
        auto degrees = std::make_shared<bool>(false);
        auto trials = std::make_shared<std::uint64_t>(100000);
        auto seed = std::make_shared<std::uint64_t>(1);
        auto out = std::make_shared<OutputOptions>();
        out->format = "json";
        cmd->add_option("--theta", *theta, "State separation angle")->required();
        cmd->add_option("--lambda", *lambda, "0-1-lambda family: reject cost");
        cmd->add_option("--lambda-e", *lambda_e, "error-reject family: error cost");
        cmd->add_option("--lambda-r", *lambda_r, "error-reject family: reject cost");
        cmd->add_option("--phi", *phi, "Measurement angle, or 'optimal'")->capture_default_str();
        cmd->add_flag("--degrees", *degrees, "Interpret input angles as degrees");
        cmd->add_option("--trials", *trials, "Number of trials")->capture_default_str();
        cmd->add_option("--seed", *seed, "RNG seed")->capture_default_str();
        cmd->add_option("--output,-o", out->path, "Output file (default: standard output)");
        cmd->callback([=, &run] {
            run = [=] {
                const bool has_01 = !lambda->empty();
                const bool has_er = !lambda_e->empty() || !lambda_r->empty();
                if (has_01 == has_er) {
                    throw std::invalid_argument(
                        "simulate: give either --lambda or --lambda-e with --lambda-r");
                }
                if (has_er && (lambda_e->empty() || lambda_r->empty())) {
                    throw std::invalid_argument("simulate: --lambda-e and --lambda-r go together");
                }
                return cmd_simulate(
                    parse_scalar(*theta, "--theta", *degrees, true), has_er,
                    has_01 ? parse_scalar(*lambda, "--lambda", false, false) : 0.0,
                    has_er ? parse_scalar(*lambda_e, "--lambda-e", false, false) : 0.0,
                    has_er ? parse_scalar(*lambda_r, "--lambda-r", false, false) : 0.0, *phi,
                    *degrees, *trials, *seed, *out);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        return run();
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
