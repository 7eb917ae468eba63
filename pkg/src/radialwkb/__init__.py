"""Bohr-Sommerfeld quantization of d-dimensional radial S-states.

Closed-form and numerical action integrals, Bohr-Sommerfeld energies, a
Lagrange-mesh eigensolver for the exact energies, and the WKB correction
gamma that reconciles the two.
"""
from .action import action, action_closed, action_numeric
from .bs_solver import (
    bs_energy_coulomb,
    bs_energy_general,
    bs_energy_log,
    bs_energy_power,
    bs_energy_well,
    exact_well_energy,
    large_d_coefficients,
)
from .exceptions import ConvergenceError, DomainError, FitError, UsageError
from .mesh_solver import MeshConfig, SpectrumResult, count_nodes, solve_radial, validate_solver
from .potentials import PotentialSpec, QuantumLabel, evaluate, parse_potential, turning_point
from .report import (
    ComparisonRow,
    anharmonic_gamma_table,
    build_table,
    figure_dataset,
    gamma_zero_crossing,
)
from .wkb_correction import (
    GammaFit,
    fit_gamma,
    gamma_extract,
    gamma_fit_eval,
    gamma_one_dimensional,
    modified_bs_energy,
    modified_bs_energy_log,
)

__version__ = "0.1.0"

__all__ = [
    "ComparisonRow",
    "ConvergenceError",
    "DomainError",
    "FitError",
    "GammaFit",
    "MeshConfig",
    "PotentialSpec",
    "QuantumLabel",
    "SpectrumResult",
    "UsageError",
    "action",
    "action_closed",
    "action_numeric",
    "anharmonic_gamma_table",
    "bs_energy_coulomb",
    "bs_energy_general",
    "bs_energy_log",
    "bs_energy_power",
    "bs_energy_well",
    "build_table",
    "count_nodes",
    "evaluate",
    "exact_well_energy",
    "figure_dataset",
    "fit_gamma",
    "gamma_extract",
    "gamma_fit_eval",
    "gamma_one_dimensional",
    "gamma_zero_crossing",
    "large_d_coefficients",
    "modified_bs_energy",
    "modified_bs_energy_log",
    "parse_potential",
    "solve_radial",
    "turning_point",
    "validate_solver",
]
