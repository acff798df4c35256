import math

import numpy as np
import pytest

from hodelta.errors import QuadratureError
from hodelta.quadrature import gaussian_cutoff, integrate


def test_polynomial_exact():
    assert integrate(lambda x: 5 * x**4 - 3 * x**2, 0.0, 2.0) == pytest.approx(24.0, rel=1e-15)


def test_reversed_limits_flip_sign():
    assert integrate(np.sin, math.pi, 0.0) == pytest.approx(-2.0, rel=1e-14)


def test_empty_interval():
    assert integrate(np.exp, 1.5, 1.5) == 0.0


def test_gaussian_half_line():
    y = gaussian_cutoff(0.0, 1.0)
    assert integrate(lambda x: np.exp(-x * x), 0.0, y) == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-14)


def test_kinked_integrand_adapts():
    assert integrate(lambda x: np.abs(x - 0.3), 0.0, 1.0) == pytest.approx(0.29, rel=1e-12)


def test_panel_budget_is_enforced():
    with pytest.raises(QuadratureError):
        integrate(lambda x: np.sin(1.0 / x), 1e-6, 1.0, max_panels=5)


@pytest.mark.parametrize("z,alpha", [(0.0, 1.0), (-3.0, 0.2), (2.0, 0.7), (-0.5, 0.861)])
def test_cutoff_exponent(z, alpha):
    y = gaussian_cutoff(z, alpha)
    assert y > 0.0
    assert 2 * z * y - alpha * alpha * y * y == pytest.approx(-90.0, rel=1e-12)
