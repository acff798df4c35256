"""Exact even-parity eigenvalues from the transcendental condition.

With epsilon = nu + 1/2 the even states of the reduced Hamiltonian
H = -1/2 d^2/dy^2 + y^2/2 + g delta(y) satisfy

    nu - g * Gamma(1 - nu/2) / Gamma(1/2 - nu/2) = 0,

which is solved here by bisection.  Odd states are untouched by the delta
and keep nu = 1, 3, 5, ...
"""

from __future__ import annotations

import math
from typing import Literal

from .errors import BracketError, DomainError
from .models import EnergyResult
from .specfn import POLE_GUARD, gamma, gamma_highprec

GammaBackend = Literal["highprec", "appendixB"]

DEFAULT_TOL = 1e-9
_GAMMAS = {"highprec": gamma_highprec, "appendixB": gamma}


def check_coupling(g: float) -> float:
    g = float(g)
    if not math.isfinite(g):
        raise DomainError(f"coupling g must be finite, got {g!r}")
    return g


def gamma_ratio(a: float, b: float, backend: GammaBackend = "highprec") -> float:
    """Gamma(a) / Gamma(b), stepping both arguments down together to avoid overflow."""
    try:
        gam = _GAMMAS[backend]
    except KeyError:
        raise ValueError(f"unknown gamma backend {backend!r}") from None
    ratio = 1.0
    while a > 2.0 and b > 2.0:
        a -= 1.0
        b -= 1.0
        ratio *= a / b
    return ratio * gam(a) / gam(b)


def transcendental_residual(nu: float, g: float, backend: GammaBackend = "highprec") -> float:
    """f(nu) = nu - g Gamma(1 - nu/2) / Gamma(1/2 - nu/2); zero at even eigenvalues.

    Raises:
        PoleError: if either Gamma argument sits on a pole (nu = 2, 4, ... or 1, 3, ...).
    """
    if g == 0.0:
        return nu
    return nu - g * gamma_ratio(1.0 - 0.5 * nu, 0.5 - 0.5 * nu, backend)


def solve_nu(
    g: float,
    lo: float,
    hi: float,
    tol: float = DEFAULT_TOL,
    backend: GammaBackend = "highprec",
) -> EnergyResult:
    """Bisect the residual on [lo, hi] down to a bracket of width ``tol``.

    Use this directly for even excited levels, whose roots lie between
    consecutive poles of the residual.
    """
    if tol <= 0.0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    f_lo = transcendental_residual(lo, g, backend)
    f_hi = transcendental_residual(hi, g, backend)
    if f_lo == 0.0:
        return EnergyResult(lo)
    if f_hi == 0.0:
        return EnergyResult(hi)
    if (f_lo < 0.0) == (f_hi < 0.0):
        raise BracketError(
            f"residual has the same sign at nu={lo} ({f_lo:.3g}) and nu={hi} ({f_hi:.3g})"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        f_mid = transcendental_residual(mid, g, backend)
        if f_mid == 0.0:
            return EnergyResult(mid)
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return EnergyResult(0.5 * (lo + hi))


def ground_bracket(g: float, backend: GammaBackend = "highprec") -> tuple[float, float]:
    """Bracket of the lowest even root for g != 0."""
    if g > 0.0:
        # Keep Gamma(1/2 - nu/2) clear of its pole at nu = 1.
        return 0.0, 1.0 - 100.0 * POLE_GUARD
    floor = -(g * g + 10.0)
    lo = -1.0
    while transcendental_residual(lo, g, backend) > 0.0:
        if lo <= floor:
            raise BracketError(f"no sign change for g={g} above nu={floor}")
        lo = max(2.0 * lo, floor)
    return lo, 0.0


def solve_ground_nu(
    g: float, tol: float = DEFAULT_TOL, backend: GammaBackend = "highprec"
) -> EnergyResult:
    """Lowest even eigenvalue for coupling ``g``.

    For g > 0 the root lies in (0, 1); for g < 0 the lower end of the
    bracket is found by doubling downward from nu = -1.
    """
    g = check_coupling(g)
    if g == 0.0:
        return EnergyResult(0.0)
    lo, hi = ground_bracket(g, backend)
    return solve_nu(g, lo, hi, tol, backend)
