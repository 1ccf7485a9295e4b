"""Closed-form radial integrals of the state algebra against quadrature oracles."""

import numpy as np
import pytest

from kreinpert import DomainError
from kreinpert.points import FourierRadialState, radial_integral

CASES = [
    # (poles, d)
    ((2.0 + 1.0j,), 0.7),
    ((2.0 + 1.0j, 0.5 - 0.3j), 0.7),
    ((2.0 + 1.0j, 0.5 - 0.3j), 0.0),
    ((1.5 + 0.5j, 1.5 + 0.5j), 0.9),
    ((1.5 + 0.5j, 1.5 + 0.5j), 0.0),
    ((2.0 + 1.0j, 0.5 - 0.3j, 3.0 + 0.1j), 1.3),
    ((2.0 + 1.0j, 2.0 + 1.0j, 0.5 - 0.3j), 0.4),
    ((2.0 + 1.0j, 2.0 + 1.0j, 0.5 - 0.3j, 4.0 - 2.0j), 0.0),
]


@pytest.mark.parametrize("poles,d", CASES)
def test_closed_form_matches_quadrature(poles, d):
    closed = radial_integral(poles, 0.0, d)
    numeric = radial_integral(poles, 0.0, d, force_numeric=True)
    assert abs(closed - numeric) < 1e-9 * max(1.0, abs(closed))


def test_gaussian_is_normalized():
    g = FourierRadialState.gaussian((0.3, -0.2, 1.1), 0.8)
    assert abs(g.norm() - 1.0) < 1e-10


def test_green_eval_matches_kernel():
    from kreinpert.points import green_kernel

    z = 2.0 + 1.0j
    y = np.array([0.5, 0.0, -0.3])
    x = np.array([1.2, 0.4, 0.1])
    state = FourierRadialState.green(z, y)
    assert abs(state.eval_at(x) - green_kernel(z, x - y)) < 1e-12


def test_green_singular_at_center():
    state = FourierRadialState.green(1.0 + 1.0j, (0.0, 0.0, 0.0))
    with pytest.raises(DomainError):
        state.eval_at((0.0, 0.0, 0.0))


def test_pairing_conjugate_symmetry():
    a = FourierRadialState.green(2.0 + 1.0j, (0.0, 0.0, 0.0))
    b = FourierRadialState.gaussian((0.5, 0.2, 0.0), 1.1)
    assert abs(a.pair(b) - np.conj(b.pair(a))) < 1e-12


def test_pairing_linear_in_second_slot():
    a = FourierRadialState.gaussian((0.0, 0.0, 0.0), 1.0)
    b = FourierRadialState.green(1.0 + 0.5j, (1.0, 0.0, 0.0))
    c = FourierRadialState.gaussian((0.3, 0.1, 0.0), 0.9)
    lhs = a.pair(2.0j * b + c)
    rhs = 2.0j * a.pair(b) + a.pair(c)
    assert abs(lhs - rhs) < 1e-12


def test_resolvent_appends_pole():
    z = 3.0 - 1.0j
    g = FourierRadialState.green(1.0 + 1.0j, (0.0, 0.0, 0.0))
    rg = g.resolvent(z)
    assert rg.terms[0].poles == (1.0 + 1.0j, z)


def test_resolvent_pairing_against_quadrature():
    # <g, R(z) g> closed form vs the forced-quadrature route
    g = FourierRadialState.green(2.0 + 1.0j, (0.7, 0.0, 0.0))
    rg = g.resolvent(0.5 + 2.0j)
    assert abs(g.pair(rg) - g.pair(rg, force_numeric=True)) < 1e-8


def test_triple_pole_unsupported():
    z = 1.0 + 1.0j
    g = FourierRadialState.green(z, (0.5, 0.0, 0.0)).resolvent(z).resolvent(z)
    with pytest.raises(NotImplementedError):
        g.eval_at((0.0, 0.0, 0.0))


def test_divergent_integrals_rejected():
    with pytest.raises(DomainError):
        radial_integral((), 0.0, 0.5)
    with pytest.raises(DomainError):
        radial_integral((1.0 + 1.0j,), 0.0, 0.0)
