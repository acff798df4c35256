import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import mp_energy_repulsive
from hodelta.errors import BracketError, DomainError
from hodelta.exact import solve_ground_nu
from hodelta.oracle import TrialFunction, rayleigh_quotient
from hodelta.repulsive import (
    energy_parts,
    energy_repulsive,
    energy_repulsive_derivative,
    minimize_repulsive,
)


def central_difference(alpha, g, h=1e-5):
    return (energy_repulsive(alpha + h, g) - energy_repulsive(alpha - h, g)) / (2 * h)


def test_free_oscillator():
    assert energy_repulsive(1.0, 0.0) == pytest.approx(0.5, rel=1e-15)
    assert energy_repulsive_derivative(1.0, 0.0) == pytest.approx(0.0, abs=1e-12)


def test_printed_optimum_energy():
    assert abs(energy_repulsive(1.068158, 0.5) - 0.734490) <= 1e-6


def test_derivative_vanishes_at_printed_optimum():
    assert abs(energy_repulsive_derivative(1.057843, 2.5)) <= 1e-5


@pytest.mark.parametrize("alpha,g", [(1.0, 1.0), (0.7, 0.3), (1.4, 4.0), (1.1, 20.0)])
def test_closed_form_matches_high_precision_quadrature(alpha, g):
    assert energy_repulsive(alpha, g) == pytest.approx(mp_energy_repulsive(alpha, g), rel=1e-13)


def test_closed_form_matches_rayleigh_oracle():
    psi = TrialFunction("linear_cusp", 1.0, 1.0)
    assert energy_repulsive(1.0, 1.0) == pytest.approx(rayleigh_quotient(psi, 1.0), abs=1e-9)


def test_derivative_example():
    assert energy_repulsive_derivative(1.2, 0.5) == pytest.approx(central_difference(1.2, 0.5), abs=1e-6)


@pytest.mark.parametrize("g", [0.1, 0.5, 1.0, 2.5, 5.0, 10.0])
def test_derivative_matches_finite_differences_on_grid(g):
    for alpha in np.linspace(0.6, 1.8, 13):
        assert energy_repulsive_derivative(alpha, g) == pytest.approx(
            central_difference(alpha, g), abs=1e-6
        )


def test_misprinted_derivative_fails_the_same_check():
    worst = max(
        abs(energy_repulsive_derivative(a, g, b_alpha_power=3) - central_difference(a, g))
        for g in (0.5, 1.0, 2.5)
        for a in np.linspace(0.6, 1.8, 13)
    )
    assert worst > 1e-3


def test_parts_are_consistent_with_their_derivatives():
    h = 1e-6
    for alpha, g in [(0.8, 0.5), (1.3, 3.0)]:
        p = energy_parts(alpha, g)
        up, dn = energy_parts(alpha + h, g), energy_parts(alpha - h, g)
        assert p.I_alpha == pytest.approx((up.I - dn.I) / (2 * h), rel=1e-7)
        assert p.B_alpha == pytest.approx((up.B - dn.B) / (2 * h), rel=1e-7)


def test_zero_coupling_minimum():
    params, energy = minimize_repulsive(0.0)
    assert params.alpha == pytest.approx(1.0, abs=1e-8)
    assert energy.nu == pytest.approx(0.0, abs=1e-14)


@pytest.mark.parametrize(
    "g,alpha,nu",
    [(1.0, 1.077488, 0.394997), (0.1, 1.023871, 0.054315), (5.0, 1.034671, 0.797460)],
)
def test_minimiser_examples(g, alpha, nu):
    params, energy = minimize_repulsive(g)
    assert abs(params.alpha - alpha) <= 1.5e-6
    assert abs(energy.nu - nu) <= 1e-6


@settings(max_examples=100, deadline=None)
@given(st.floats(0.01, 50.0))
def test_variational_bound(g):
    _, energy = minimize_repulsive(g)
    exact = solve_ground_nu(g).nu
    assert exact - 1e-9 <= energy.nu < 1.0


def test_alpha_min_rises_then_returns_towards_one():
    gs = [0.1, 0.5, 1.0, 2.0, 5.0, 20.0, 100.0]
    alphas = [minimize_repulsive(g)[0].alpha for g in gs]
    peak = int(np.argmax(alphas))
    assert 0 < peak < len(gs) - 1
    assert all(a > 1.0 for a in alphas)
    assert alphas[-1] < alphas[peak]


def test_strong_barrier():
    nu = minimize_repulsive(50.0)[1].nu
    assert 0.9 < nu < 1.0


def test_domain_and_bracket_errors():
    with pytest.raises(DomainError):
        energy_repulsive(1.0, -0.1)
    with pytest.raises(DomainError):
        minimize_repulsive(-1.0)
    with pytest.raises(BracketError):
        minimize_repulsive(1.0, bracket=(1.3, 2.0))
