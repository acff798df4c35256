"""Independent high-precision references shared by the test modules."""

from __future__ import annotations

import mpmath

mpmath.mp.dps = 30


def mp_exact_nu(g: float, lo: float, hi: float) -> float:
    """Root of nu - g Gamma(1 - nu/2) / Gamma(1/2 - nu/2) by mpmath's Anderson-Bjorck solver."""
    g = mpmath.mpf(g)

    def f(nu):
        return nu - g * mpmath.gamma(1 - nu / 2) / mpmath.gamma(mpmath.mpf(1) / 2 - nu / 2)

    return float(mpmath.findroot(f, (mpmath.mpf(lo), mpmath.mpf(hi)), solver="anderson"))


def mp_rayleigh(value, slope, g: float) -> float:
    """<H> for an even function given on y >= 0 through its value and right slope."""
    inf = mpmath.inf
    kinetic = mpmath.quad(lambda y: slope(y) ** 2 / 2, [0, 1, inf])
    potential = mpmath.quad(lambda y: y * y * value(y) ** 2 / 2, [0, 1, inf])
    norm = mpmath.quad(lambda y: value(y) ** 2, [0, 1, inf])
    return float((2 * (kinetic + potential) + g * value(0) ** 2) / (2 * norm))


def mp_energy_attractive(alpha: float, g: float) -> float:
    a2 = mpmath.mpf(alpha) ** 2
    g = mpmath.mpf(g)

    def value(y):
        return mpmath.exp(g * y - a2 * y * y / 2)

    return mp_rayleigh(value, lambda y: (g - a2 * y) * value(y), g)


def mp_energy_repulsive(alpha: float, g: float) -> float:
    a2 = mpmath.mpf(alpha) ** 2
    g = mpmath.mpf(g)

    def value(y):
        return (1 + g * y) * mpmath.exp(-a2 * y * y / 2)

    def slope(y):
        return (g - a2 * y * (1 + g * y)) * mpmath.exp(-a2 * y * y / 2)

    return mp_rayleigh(value, slope, g)



def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    verdicts = getattr(module, "VERDICTS", None)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(verdicts):
        terminalreporter.write_line(verdicts[number])
