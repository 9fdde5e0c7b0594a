"""Optimal decision rules, measurements and expected risk for binary quantum
state discrimination with a costed reject option."""

from qsd._core import (
    LossMatrix,
    OutcomeProbabilities,
    RiskValidationRow,
    SimulationReport,
    analytic_risk,
    born_probabilities,
    chow_identity_risk,
    conditional_risk,
    error_from_reject_integral,
    generalized_grid_search_optimal_angle,
    generalized_risk,
    grid_search_optimal_angle,
    helstrom_boundary,
    lambda_from_reject_probability,
    optimal_angle,
    optimal_decision,
    optimal_rule,
    outcome_probabilities,
    posterior,
    povm_elements,
    risk_from_reject_integral,
    simulate_game,
    total_risk,
    tradeoff_curve,
    validate_risk_surface,
)
from qsd._core import __version__

__all__ = [
    "LossMatrix",
    "OutcomeProbabilities",
    "RiskValidationRow",
    "SimulationReport",
    "analytic_risk",
    "born_probabilities",
    "chow_identity_risk",
    "conditional_risk",
    "error_from_reject_integral",
    "generalized_grid_search_optimal_angle",
    "generalized_risk",
    "grid_search_optimal_angle",
    "helstrom_boundary",
    "lambda_from_reject_probability",
    "optimal_angle",
    "optimal_decision",
    "optimal_rule",
    "outcome_probabilities",
    "posterior",
    "povm_elements",
    "risk_from_reject_integral",
    "simulate_game",
    "total_risk",
    "tradeoff_curve",
    "validate_risk_surface",
    "__version__",
]
