"""Small value types shared across the solvers."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError


@dataclass(frozen=True)
class EnergyResult:
    """A dimensionless energy, stored as nu with epsilon = nu + 1/2."""

    nu: float

    @property
    def epsilon(self) -> float:
        return self.nu + 0.5

    @classmethod
    def from_epsilon(cls, epsilon: float) -> EnergyResult:
        return cls(nu=epsilon - 0.5)


@dataclass(frozen=True)
class TrialParams:
    """Variational parameters: Gaussian width alpha and cusp slope z."""

    alpha: float
    z: float

    def __post_init__(self) -> None:
        if not (self.alpha > 0.0 and math.isfinite(self.alpha)):
            raise DomainError(f"alpha must be positive and finite, got {self.alpha!r}")


@dataclass(frozen=True)
class TraceBlock:
    """One refinement step: the window searched and the (alpha, epsilon) samples."""

    window_lo: float
    window_hi: float
    samples: tuple[tuple[float, float], ...]

    @property
    def width(self) -> float:
        return self.window_hi - self.window_lo

    def argmin(self) -> int:
        return min(range(len(self.samples)), key=lambda i: self.samples[i][1])


@dataclass
class MinimizationTrace:
    iterations: list[TraceBlock] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.iterations)

    def is_nested(self) -> bool:
        return all(
            inner.window_lo >= outer.window_lo and inner.window_hi <= outer.window_hi
            for outer, inner in zip(self.iterations, self.iterations[1:])
        )

    def wide_rows(self) -> tuple[list[str], list[list[float]]]:
        """Header and rows in Table I layout: one (alpha, epsilon) column pair per block."""
        header: list[str] = []
        for k in range(1, len(self.iterations) + 1):
            header += [f"alpha_{k}", f"epsilon_{k}"]
        depth = max((len(b.samples) for b in self.iterations), default=0)
        rows = []
        for i in range(depth):
            row: list[float] = []
            for block in self.iterations:
                row += list(block.samples[i]) if i < len(block.samples) else [math.nan, math.nan]
            rows.append(row)
        return header, rows

    def long_rows(self) -> tuple[list[str], list[list[float]]]:
        header = ["iteration", "window_lo", "window_hi", "alpha", "epsilon"]
        rows = [
            [k, block.window_lo, block.window_hi, alpha, eps]
            for k, block in enumerate(self.iterations, start=1)
            for alpha, eps in block.samples
        ]
        return header, rows
