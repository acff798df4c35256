"""Special functions: complementary error function and Gamma.

Everything here is scalar and pure.  ``erfc``/``erfcx`` are built from a
power series for small arguments and a continued fraction for large ones,
so the package does not depend on a library error function.  ``gamma`` is
the eight-coefficient polynomial of Abramowitz & Stegun 6.1.35 extended by
the functional recurrence; ``gamma_highprec`` is an independent
double-precision Gamma used as the default backend of the exact solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import PoleError

SQRT_PI = math.sqrt(math.pi)
_TWO_OVER_SQRT_PI = 2.0 / SQRT_PI

#: Default distance from a non-positive integer at which Gamma refuses to evaluate.
POLE_GUARD = 1e-12

# Below this argument the scaled-erf power series is used, above it the
# continued fraction.  Both are accurate to a few ulp across the switch.
_SERIES_MAX = 1.0
# exp(z*z) overflows a double beyond this.
_EXP_ARG_MAX = 709.0


@dataclass(frozen=True)
class GammaCoefficients:
    """Coefficients of Gamma(x+1) = 1 + b1 x + ... + b8 x^8 on 0 <= x <= 1.

    The truncation error of the polynomial is at most 3e-7 on that interval.
    """

    b1: float = -0.577191652
    b2: float = 0.988205891
    b3: float = -0.897056937
    b4: float = 0.918206857
    b5: float = -0.756704078
    b6: float = 0.482199394
    b7: float = -0.193527818
    b8: float = 0.035868343

    error_bound: float = 3e-7

    def as_tuple(self) -> tuple[float, ...]:
        return (self.b1, self.b2, self.b3, self.b4, self.b5, self.b6, self.b7, self.b8)


GAMMA_COEFFICIENTS = GammaCoefficients()


def _check_pole(x: float, guard: float) -> None:
    if not math.isfinite(x):
        raise PoleError(f"gamma argument must be finite, got {x!r}")
    if x <= guard:
        nearest = round(x)
        if nearest <= 0 and abs(x - nearest) <= guard:
            raise PoleError(f"gamma({x!r}) is within {guard:g} of the pole at {nearest}")


def gamma_poly(x: float, coeffs: GammaCoefficients = GAMMA_COEFFICIENTS) -> float:
    """Polynomial approximation to Gamma(x + 1) for 0 <= x <= 1 (Horner form)."""
    acc = 0.0
    for b in reversed(coeffs.as_tuple()):
        acc = (acc + b) * x
    return 1.0 + acc


def gamma(x: float, guard: float = POLE_GUARD) -> float:
    """Gamma function from the polynomial on [1, 2] plus the recurrence.

    For x > 2 the argument is stepped down with Gamma(x) = (x-1) Gamma(x-1);
    for x < 1 it is stepped up with Gamma(x) = Gamma(x+n) / (x (x+1) ... (x+n-1))
    until x + n lies in [1, 2].

    Raises:
        PoleError: if ``x`` is within ``guard`` of 0, -1, -2, ...
    """
    x = float(x)
    _check_pole(x, guard)
    if x > 2.0:
        n = int(math.floor(x - 1.0))
        u = x - n
        if u < 1.0:
            n -= 1
            u += 1.0
        prod = 1.0
        v = u
        for _ in range(n):
            prod *= v
            v += 1.0
        return prod * gamma_poly(u - 1.0)
    if x < 1.0:
        n = int(math.ceil(1.0 - x))
        u = x + n
        if u > 2.0:
            n -= 1
            u -= 1.0
        denom = 1.0
        v = x
        for _ in range(n):
            denom *= v
            v += 1.0
        return gamma_poly(u - 1.0) / denom
    return gamma_poly(x - 1.0)


def gamma_highprec(x: float, guard: float = POLE_GUARD) -> float:
    """Double-precision Gamma (libm ``tgamma``) with the same pole guard."""
    x = float(x)
    _check_pole(x, guard)
    return math.gamma(x)


def _scaled_erf_series(z: float) -> float:
    """exp(z^2) * erf(z) * sqrt(pi) / 2 as a series of positive terms."""
    term = z
    total = z
    two_z2 = 2.0 * z * z
    n = 0
    while True:
        n += 1
        term *= two_z2 / (2 * n + 1)
        total += term
        if term <= 1e-17 * total:
            return total


def _erfcx_continued_fraction(z: float) -> float:
    """erfcx(z) for z >= 1 from the even contraction of Laplace's continued fraction.

    sqrt(pi) erfcx(z) = 2z / (2z^2 + 1 - 1*2 / (2z^2 + 5 - 3*4 / (2z^2 + 9 - ...))),
    evaluated with the modified Lentz algorithm (about 95 terms at z = 1).
    """
    if z > 1e7:
        return (1.0 - 0.5 / (z * z)) / (SQRT_PI * z)
    x = 2.0 * z * z
    f = x + 1.0
    c = f
    d = 0.0
    for k in range(1, 5000):
        a = -(2 * k - 1) * (2 * k)
        b = x + 1.0 + 4 * k
        d = 1.0 / (b + a * d)
        c = b + a / c
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return 2.0 * z / (SQRT_PI * f)


def erfcx(z: float) -> float:
    """Scaled complementary error function exp(z^2) * erfc(z).

    Strictly positive and decreasing; overflows to ``inf`` for z below about -26.6.
    """
    z = float(z)
    if z < 0.0:
        if z * z > _EXP_ARG_MAX:
            return math.inf
        return 2.0 * math.exp(z * z) - erfcx(-z)
    if z < _SERIES_MAX:
        return math.exp(z * z) - _TWO_OVER_SQRT_PI * _scaled_erf_series(z)
    return _erfcx_continued_fraction(z)


def erfc(z: float) -> float:
    """Complementary error function (2/sqrt(pi)) * integral_z^inf exp(-t^2) dt."""
    z = float(z)
    if z < 0.0:
        return 2.0 - erfc(-z)
    if z < _SERIES_MAX:
        return 1.0 - _TWO_OVER_SQRT_PI * math.exp(-z * z) * _scaled_erf_series(z)
    if z * z > _EXP_ARG_MAX + 36.0:
        return 0.0
    return math.exp(-z * z) * _erfcx_continued_fraction(z)
