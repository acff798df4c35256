"""First excited state: odd trial function psi = A y exp(Z|y|) exp(-alpha^2 y^2 / 2).

The odd function vanishes at the origin, so its energy does not depend on g:

    eps(alpha, Z) = 3 alpha^2 / 2 + (1 - alpha^4)/2 * M4/M2 + Z^2 / 2,

with Mk = int_0^inf y^k exp(2 Z y - alpha^2 y^2) dy.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .quadrature import gaussian_cutoff, integrate

DEFAULT_ALPHA_GRID = tuple(np.round(np.linspace(0.6, 1.6, 51), 12))
DEFAULT_Z_GRID = tuple(np.round(np.linspace(-1.0, 1.0, 101), 12))


def _moment(k: int, alpha: float, z: float) -> float:
    a2 = alpha * alpha
    cutoff = gaussian_cutoff(z, alpha)
    return integrate(lambda y: y**k * np.exp(2.0 * z * y - a2 * y * y), 0.0, cutoff)


def energy_excited(alpha: float, z: float) -> float:
    if not alpha > 0.0:
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    ratio = _moment(4, alpha, z) / _moment(2, alpha, z)
    return 1.5 * alpha * alpha + (1.0 - alpha**4) / 2.0 * ratio + z * z / 2.0


@dataclass(frozen=True)
class ExcitedSurface:
    alphas: tuple[float, ...]
    zs: tuple[float, ...]
    energies: np.ndarray  # shape (len(alphas), len(zs))

    def argmin(self) -> tuple[float, float, float]:
        """(alpha, z, epsilon) at the smallest grid value."""
        i, j = np.unravel_index(int(np.argmin(self.energies)), self.energies.shape)
        return self.alphas[i], self.zs[j], float(self.energies[i, j])

    def rows(self) -> list[tuple[float, float, float]]:
        return [
            (a, z, float(self.energies[i, j]))
            for i, a in enumerate(self.alphas)
            for j, z in enumerate(self.zs)
        ]


def scan_excited_surface(
    alpha_grid: Sequence[float] = DEFAULT_ALPHA_GRID,
    z_grid: Sequence[float] = DEFAULT_Z_GRID,
) -> ExcitedSurface:
    alphas = tuple(float(a) for a in alpha_grid)
    zs = tuple(float(z) for z in z_grid)
    if not alphas or not zs:
        raise DomainError("alpha and Z grids must be non-empty")
    energies = np.empty((len(alphas), len(zs)))
    for i, a in enumerate(alphas):
        for j, z in enumerate(zs):
            energies[i, j] = energy_excited(a, z)
    return ExcitedSurface(alphas, zs, energies)
