"""Ground states of the harmonic oscillator with a central delta potential.

Exact even-parity eigenvalues come from a Gamma-function transcendental
equation; variational estimates use one-parameter cusped trial functions
for attractive and repulsive couplings.  Finite-difference and quadrature
oracles cross-check both.
"""

from .attractive import energy_attractive, minimize_attractive, quadrature_energy_attractive
from .errors import (
    BracketError,
    DomainError,
    HODeltaError,
    NonUnimodalError,
    PoleError,
    QuadratureError,
)
from .exact import solve_ground_nu, solve_nu, transcendental_residual
from .excited import energy_excited, scan_excited_surface
from .models import EnergyResult, MinimizationTrace, TraceBlock, TrialParams
from .oracle import GridSpec, TrialFunction, fd_ground_epsilon, rayleigh_quotient
from .repulsive import energy_repulsive, energy_repulsive_derivative, minimize_repulsive
from .report import (
    ComparisonRow,
    asymptote_attractive,
    build_summary_table,
    emit_figure_data,
    figure_data,
)
from .specfn import erfc, erfcx, gamma, gamma_highprec

__all__ = [
    "BracketError",
    "ComparisonRow",
    "DomainError",
    "EnergyResult",
    "GridSpec",
    "HODeltaError",
    "MinimizationTrace",
    "NonUnimodalError",
    "PoleError",
    "QuadratureError",
    "TraceBlock",
    "TrialFunction",
    "TrialParams",
    "asymptote_attractive",
    "build_summary_table",
    "emit_figure_data",
    "energy_attractive",
    "energy_excited",
    "energy_repulsive",
    "energy_repulsive_derivative",
    "erfc",
    "erfcx",
    "fd_ground_epsilon",
    "figure_data",
    "gamma",
    "gamma_highprec",
    "minimize_attractive",
    "minimize_repulsive",
    "quadrature_energy_attractive",
    "rayleigh_quotient",
    "scan_excited_surface",
    "solve_ground_nu",
    "solve_nu",
    "transcendental_residual",
]
