"""Adaptive Gauss-Legendre quadrature on finite intervals."""

from __future__ import annotations

import math
from collections.abc import Callable
from functools import lru_cache

import numpy as np

from .errors import QuadratureError


@lru_cache(maxsize=None)
def _nodes(order: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(order)


def _panel(f: Callable[[np.ndarray], np.ndarray], a: float, b: float, order: int) -> float:
    x, w = _nodes(order)
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    return half * float(np.dot(w, f(mid + half * x)))


def integrate(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    abs_tol: float = 1e-14,
    rel_tol: float = 1e-13,
    order: int = 20,
    max_panels: int = 2000,
) -> float:
    """Integrate a vectorised ``f`` over [a, b].

    Each panel is compared with the sum of its two halves; panels whose
    difference exceeds their share of the tolerance are split again.

    Raises:
        QuadratureError: if more than ``max_panels`` panels would be needed.
    """
    if b == a:
        return 0.0
    if b < a:
        return -integrate(f, b, a, abs_tol, rel_tol, order, max_panels)

    whole = _panel(f, a, b, order)
    stack = [(a, b, whole)]
    total = 0.0
    length = b - a
    panels = 0
    while stack:
        lo, hi, coarse = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _panel(f, lo, mid, order)
        right = _panel(f, mid, hi, order)
        fine = left + right
        panels += 1
        share = (hi - lo) / length
        tol = max(abs_tol, rel_tol * abs(whole)) * share
        if abs(fine - coarse) <= tol or hi - lo < 1e-12 * length:
            total += fine
            continue
        if panels > max_panels:
            raise QuadratureError(
                f"adaptive quadrature on [{a}, {b}] exceeded {max_panels} panels"
            )
        stack.append((lo, mid, left))
        stack.append((mid, hi, right))
    return total


def gaussian_cutoff(z: float, alpha: float, log_drop: float = 90.0) -> float:
    """Y > 0 at which exp(2 z y - alpha^2 y^2) has fallen to exp(-log_drop)."""
    root = math.sqrt(z * z + log_drop * alpha * alpha)
    if z <= 0.0:
        return log_drop / (root - z)
    return (z + root) / (alpha * alpha)
