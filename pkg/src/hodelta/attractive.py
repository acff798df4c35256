"""Variational ground state for an attractive delta (g <= 0).

Trial function psi = A exp(g|y|) exp(-alpha^2 y^2 / 2); the cusp condition
fixes the exponential slope to g, leaving alpha as the only parameter.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError, NonUnimodalError
from .models import EnergyResult, MinimizationTrace, TraceBlock, TrialParams
from .quadrature import gaussian_cutoff, integrate
from .specfn import SQRT_PI, erfcx

DEFAULT_WINDOW = (0.01, 1.2)
SAMPLES_PER_WINDOW = 10
WINDOW_TOL = 1e-7

# q(t) switches from the erfcx expression to the continued fraction here.
_Q_SWITCH = 1.0


def _check(alpha: float, g: float) -> None:
    if not alpha > 0.0:
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    if g > 0.0:
        raise DomainError(f"attractive family needs g <= 0, got {g!r}")


def gaussian_tail_q(t: float) -> float:
    """q(t) = 1/2 + t^2 - t / (sqrt(pi) erfcx(t)) for t >= 0.

    For t >= 1 the two leading terms cancel, so q is taken from the
    continued fraction q = 1 / (2 (1 + t D)), D = t + (3/2)/(t + 2/(t + (5/2)/(t + ...))),
    obtained by substituting Laplace's fraction for erfcx.  q(0) = 1/2 and
    q(t) ~ 1/(2 t^2) for large t.
    """
    if t < _Q_SWITCH:
        return 0.5 + t * t - t / (SQRT_PI * erfcx(t))
    f = t
    c = t
    d = 0.0
    for k in range(1, 100000):
        a = 0.5 * (k + 2)
        d = 1.0 / (t + a * d)
        c = t + a / c
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return 0.5 / (1.0 + t * f)


def energy_attractive(alpha: float, g: float) -> float:
    """Energy expectation value epsilon(alpha) of the attractive trial function.

    Evaluated as -g^2/2 + (1 + alpha^4) / (2 alpha^2) * q(-g/alpha), an exact
    rearrangement of the erfc closed form that stays accurate as alpha -> 0.
    """
    _check(alpha, g)
    t = -g / alpha
    return -0.5 * g * g + (1.0 + alpha**4) / (2.0 * alpha * alpha) * gaussian_tail_q(t)


def energy_attractive_termwise(alpha: float, g: float) -> float:
    """The erfc closed form evaluated term by term.

    Each exp(-g^2/alpha^2) / erfc(-g/alpha) is computed as 1 / erfcx(-g/alpha).
    Loses digits to cancellation once -g/alpha grows past a few units; kept
    as an independent check on ``energy_attractive``.
    """
    _check(alpha, g)
    a2 = alpha * alpha
    ratio = 1.0 / erfcx(-g / alpha)
    bracket = (0.5 + g * g / a2) * SQRT_PI / 2.0 + g / (2.0 * alpha) * ratio
    return (
        a2 / 2.0
        + (1.0 - a2 * a2) / (SQRT_PI * a2) * bracket
        + g * g / 2.0
        + g * alpha * ratio / SQRT_PI
    )


def quadrature_energy_attractive(alpha: float, g: float, rel_tol: float = 1e-13) -> float:
    """Energy from the ratio-of-integrals form, integrals done by adaptive quadrature.

    epsilon = alpha^2/2 + (1 - alpha^4)/2 * M/N + g^2/2 + g/N with
    N = int exp(2g|y| - alpha^2 y^2) dy and M = int y^2 exp(...) dy over the real line.
    """
    _check(alpha, g)
    a2 = alpha * alpha
    cutoff = gaussian_cutoff(g, alpha)

    def weight(y: np.ndarray) -> np.ndarray:
        return np.exp(2.0 * g * y - a2 * y * y)

    norm = 2.0 * integrate(weight, 0.0, cutoff, rel_tol=rel_tol)
    second = 2.0 * integrate(lambda y: y * y * weight(y), 0.0, cutoff, rel_tol=rel_tol)
    return a2 / 2.0 + (1.0 - a2 * a2) / 2.0 * second / norm + g * g / 2.0 + g / norm


def minimize_attractive(
    g: float,
    window: tuple[float, float] = DEFAULT_WINDOW,
    samples: int = SAMPLES_PER_WINDOW,
    tol: float = WINDOW_TOL,
) -> tuple[TrialParams, EnergyResult, MinimizationTrace]:
    """Minimise epsilon(alpha) by repeated window refinement.

    Each pass evaluates ``samples`` equally spaced alphas spanning the window
    (both ends included) and shrinks the window to the two neighbours of the
    sampled minimum.  Stops once the window is narrower than ``tol``.

    Raises:
        NonUnimodalError: if the sampled minimum lands on a window end in two
            consecutive passes.
    """
    if g > 0.0:
        raise DomainError(f"attractive family needs g <= 0, got {g!r}")
    if samples < 3:
        raise ValueError("need at least three samples per window")
    lo, hi = window
    if not 0.0 < lo < hi:
        raise DomainError(f"bad initial window {window!r}")

    trace = MinimizationTrace()
    edge_hits = 0
    while True:
        step = (hi - lo) / (samples - 1)
        alphas = [lo + i * step for i in range(samples - 1)] + [hi]
        block = TraceBlock(lo, hi, tuple((a, energy_attractive(a, g)) for a in alphas))
        trace.iterations.append(block)
        k = block.argmin()
        if hi - lo < tol:
            break
        if k in (0, samples - 1):
            edge_hits += 1
            if edge_hits >= 2:
                raise NonUnimodalError(
                    f"minimum stuck at window edge alpha={alphas[k]} for g={g}"
                )
        else:
            edge_hits = 0
        lo, hi = alphas[max(k - 1, 0)], alphas[min(k + 1, samples - 1)]

    alpha_min, eps_min = block.samples[k]
    return TrialParams(alpha_min, g), EnergyResult.from_epsilon(eps_min), trace
