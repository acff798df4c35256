"""Variational ground state for a repulsive delta (g >= 0).

Trial function psi = A (1 + g|y|) exp(-alpha^2 y^2 / 2).  Everything is
expressed through the half-norm B and the half second moment I of the
trial function, both closed-form polynomials in 1/alpha.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BracketError, DomainError
from .models import EnergyResult, TrialParams
from .specfn import SQRT_PI

DEFAULT_BRACKET = (0.5, 2.0)
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class RepulsiveEnergyParts:
    I: float
    B: float
    I_alpha: float
    B_alpha: float


def _check(alpha: float, g: float) -> None:
    if not alpha > 0.0:
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    if g < 0.0:
        raise DomainError(f"repulsive family needs g >= 0, got {g!r}")


def energy_parts(alpha: float, g: float, b_alpha_power: int = 4) -> RepulsiveEnergyParts:
    """I, B and their alpha-derivatives.

    ``b_alpha_power`` is the power of alpha under the g^2 term of dB/dalpha.
    The correct value is 4; 3 reproduces a misprinted variant of the
    derivative and exists only so tests can show it is wrong.
    """
    _check(alpha, g)
    g2 = g * g
    I = SQRT_PI / (4 * alpha**3) + g / alpha**4 + 3 * g2 * SQRT_PI / (8 * alpha**5)
    B = SQRT_PI / (2 * alpha) + g / alpha**2 + g2 * SQRT_PI / (4 * alpha**3)
    I_alpha = -3 * SQRT_PI / (4 * alpha**4) - 4 * g / alpha**5 - 15 * g2 * SQRT_PI / (8 * alpha**6)
    B_alpha = (
        -SQRT_PI / (2 * alpha**2)
        - 2 * g / alpha**3
        - 3 * g2 * SQRT_PI / (4 * alpha**b_alpha_power)
    )
    return RepulsiveEnergyParts(I, B, I_alpha, B_alpha)


def energy_repulsive(alpha: float, g: float) -> float:
    """epsilon(alpha) = alpha^2/2 + (1-alpha^4)/2 I/B + g^2 sqrt(pi)/(4 alpha B) + g/(2B)."""
    p = energy_parts(alpha, g)
    return (
        alpha * alpha / 2
        + (1 - alpha**4) / 2 * p.I / p.B
        + g * g / 2 * (SQRT_PI / alpha) / (2 * p.B)
        + g / (2 * p.B)
    )


def energy_repulsive_derivative(alpha: float, g: float, b_alpha_power: int = 4) -> float:
    """Analytic d(epsilon)/d(alpha) for the repulsive trial function."""
    p = energy_parts(alpha, g, b_alpha_power)
    I, B, Ia, Ba = p.I, p.B, p.I_alpha, p.B_alpha
    w = 1 - alpha**4
    g2 = g * g
    return (
        alpha
        - g2 * SQRT_PI / (4 * alpha**2) / B
        - g2 * SQRT_PI / (4 * alpha) * Ba / B**2
        - 2 * alpha**3 * I / B
        + w / 2 * Ia / B
        - w / 2 * I * Ba / B**2
        - g / (2 * B**2) * Ba
    )


def minimize_repulsive(
    g: float,
    bracket: tuple[float, float] = DEFAULT_BRACKET,
    tol: float = DEFAULT_TOL,
    b_alpha_power: int = 4,
) -> tuple[TrialParams, EnergyResult]:
    """Locate alpha_min by bisection on the analytic derivative.

    Raises:
        BracketError: if the derivative has the same sign at both bracket ends.
    """
    if g < 0.0:
        raise DomainError(f"repulsive family needs g >= 0, got {g!r}")
    lo, hi = bracket
    d_lo = energy_repulsive_derivative(lo, g, b_alpha_power)
    d_hi = energy_repulsive_derivative(hi, g, b_alpha_power)
    if (d_lo < 0.0) == (d_hi < 0.0):
        raise BracketError(f"derivative does not change sign on {bracket} for g={g}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        d_mid = energy_repulsive_derivative(mid, g, b_alpha_power)
        if d_mid == 0.0:
            lo = hi = mid
            break
        if (d_mid < 0.0) == (d_lo < 0.0):
            lo, d_lo = mid, d_mid
        else:
            hi = mid
    alpha = 0.5 * (lo + hi)
    return TrialParams(alpha, g), EnergyResult.from_epsilon(energy_repulsive(alpha, g))
