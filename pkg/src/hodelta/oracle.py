"""Independent checks on the closed-form and transcendental results.

``fd_ground_epsilon`` diagonalises a three-point finite-difference version of
H = -1/2 d^2/dy^2 + y^2/2 + g delta(y), with the delta as an on-site
potential g/h at the central node, by Sturm-sequence bisection.

``rayleigh_quotient`` integrates <psi|H|psi>/<psi|psi> for the three trial
families using the first-derivative form of the kinetic energy,
(1/2) int psi'^2, so nothing is differentiated across the cusp.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy import integrate as sp_integrate

from .errors import BracketError, DomainError, QuadratureError
from .quadrature import gaussian_cutoff


class GridTooSmallWarning(UserWarning):
    """The computed ground state has not decayed at the edge of the grid."""


@dataclass(frozen=True)
class GridSpec:
    half_width: float = 12.0
    points: int = 4801

    def __post_init__(self) -> None:
        if not self.half_width > 0.0:
            raise DomainError(f"half_width must be positive, got {self.half_width!r}")
        if self.points < 3 or self.points % 2 == 0:
            raise DomainError(f"points must be odd and >= 3, got {self.points!r}")

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / (self.points - 1)

    def nodes(self) -> np.ndarray:
        return np.linspace(-self.half_width, self.half_width, self.points)


def _tridiagonal(g: float, grid: GridSpec) -> tuple[list[float], float]:
    h = grid.spacing
    y = grid.nodes()
    diag = 1.0 / (h * h) + 0.5 * y * y
    diag[grid.points // 2] += g / h
    return diag.tolist(), -0.5 / (h * h)


def sturm_count(diag: list[float], off: float, x: float) -> int:
    """Number of eigenvalues of the constant-off-diagonal tridiagonal matrix below x."""
    off2 = off * off
    q = diag[0] - x
    count = 1 if q < 0.0 else 0
    for d in diag[1:]:
        q = d - x - off2 / (q if q != 0.0 else 1e-300)
        if q < 0.0:
            count += 1
    return count


def _solve_shifted(diag: list[float], off: float, shift: float, rhs: list[float]) -> list[float]:
    """Thomas algorithm for (T - shift) x = rhs."""
    n = len(diag)
    c = [0.0] * n
    d = [0.0] * n
    denom = diag[0] - shift
    c[0] = off / denom
    d[0] = rhs[0] / denom
    for i in range(1, n):
        denom = diag[i] - shift - off * c[i - 1]
        c[i] = off / denom
        d[i] = (rhs[i] - off * d[i - 1]) / denom
    x = [0.0] * n
    x[-1] = d[-1]
    for i in range(n - 2, -1, -1):
        x[i] = d[i] - c[i] * x[i + 1]
    return x


def fd_ground_epsilon(g: float, grid: GridSpec = GridSpec(), tol: float = 1e-12) -> float:
    """Lowest eigenvalue of the finite-difference Hamiltonian.

    Warns with :class:`GridTooSmallWarning` when the eigenvector at the grid
    edge exceeds 1e-6 of its maximum.
    """
    diag, off = _tridiagonal(g, grid)
    # Gershgorin interval.
    lo = min(diag) - 2.0 * abs(off)
    hi = max(diag) + 2.0 * abs(off)
    if sturm_count(diag, off, hi) < 1:
        raise BracketError("Gershgorin bound does not enclose the spectrum")
    while hi - lo > tol * max(1.0, abs(lo)):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if sturm_count(diag, off, mid) >= 1:
            hi = mid
        else:
            lo = mid
    eps = 0.5 * (lo + hi)

    vec = [1.0] * len(diag)
    shift = eps - 1e-9 * max(1.0, abs(eps))
    for _ in range(3):
        vec = _solve_shifted(diag, off, shift, vec)
        scale = max(abs(v) for v in vec)
        vec = [v / scale for v in vec]
    edge = max(abs(vec[0]), abs(vec[-1]))
    if edge > 1e-6:
        warnings.warn(
            f"ground state is {edge:.2e} of its peak at y = +-{grid.half_width}; "
            "increase half_width",
            GridTooSmallWarning,
            stacklevel=2,
        )
    return eps


Family = Literal["exp_cusp", "linear_cusp", "odd"]


@dataclass(frozen=True)
class TrialFunction:
    """Closed-form trial function on y >= 0, extended by parity.

    exp_cusp:    exp(z y) exp(-alpha^2 y^2 / 2)        (attractive ground state)
    linear_cusp: (1 + z y) exp(-alpha^2 y^2 / 2)       (repulsive ground state)
    odd:         y exp(z y) exp(-alpha^2 y^2 / 2)      (first excited state)
    """

    family: Family
    alpha: float
    z: float

    def __post_init__(self) -> None:
        if self.family not in ("exp_cusp", "linear_cusp", "odd"):
            raise DomainError(f"unknown trial family {self.family!r}")
        if not self.alpha > 0.0:
            raise DomainError(f"alpha must be positive, got {self.alpha!r}")

    def value(self, y: float) -> float:
        a2 = self.alpha * self.alpha
        if self.family == "exp_cusp":
            return math.exp(self.z * y - 0.5 * a2 * y * y)
        if self.family == "linear_cusp":
            return (1.0 + self.z * y) * math.exp(-0.5 * a2 * y * y)
        return y * math.exp(self.z * y - 0.5 * a2 * y * y)

    def slope(self, y: float) -> float:
        """Right-hand derivative for y >= 0."""
        a2 = self.alpha * self.alpha
        if self.family == "exp_cusp":
            return (self.z - a2 * y) * math.exp(self.z * y - 0.5 * a2 * y * y)
        if self.family == "linear_cusp":
            return (self.z - a2 * y * (1.0 + self.z * y)) * math.exp(-0.5 * a2 * y * y)
        return (1.0 + y * (self.z - a2 * y)) * math.exp(self.z * y - 0.5 * a2 * y * y)

    def cutoff(self) -> float:
        z = 0.0 if self.family == "linear_cusp" else self.z
        return gaussian_cutoff(z, self.alpha)


def _half_line(f, upper: float) -> float:
    value, _, info, *rest = sp_integrate.quad(
        f, 0.0, upper, epsabs=0.0, epsrel=1e-12, limit=400, full_output=1
    )
    if rest:
        raise QuadratureError(f"quad did not converge: {rest[0]}")
    return value


def rayleigh_quotient(psi: TrialFunction, g: float) -> float:
    """<psi|H|psi> / <psi|psi> by quadrature over the half line."""
    upper = psi.cutoff()
    kinetic = _half_line(lambda y: 0.5 * psi.slope(y) ** 2, upper)
    potential = _half_line(lambda y: 0.5 * y * y * psi.value(y) ** 2, upper)
    norm = _half_line(lambda y: psi.value(y) ** 2, upper)
    # Both halves contribute equally; the delta term is counted once.
    return (2.0 * (kinetic + potential) + g * psi.value(0.0) ** 2) / (2.0 * norm)
