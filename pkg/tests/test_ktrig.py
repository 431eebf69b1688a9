"""Label-dependent trigonometry: closed values, identities, inversion."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ckgeom import PoleError, ck, half_period, kinv, sk, tk, vk

from helpers import ref_ck, ref_sk, ref_vk

KAPPAS = [-1.0, -0.5, 0.0, 0.5, 1.0]

kappa_st = st.floats(min_value=-4.0, max_value=4.0, allow_nan=False)
x_st = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)


@pytest.mark.parametrize("kappa", KAPPAS)
@pytest.mark.parametrize("x", [-2.0, -0.7, 0.0, 0.3, 1.9])
def test_matches_reference_forms(kappa, x):
    assert ck(kappa, x) == pytest.approx(ref_ck(kappa, x), abs=1e-15)
    assert sk(kappa, x) == pytest.approx(ref_sk(kappa, x), abs=1e-15)
    assert vk(kappa, x) == pytest.approx(ref_vk(kappa, x), abs=1e-14)


@given(kappa=kappa_st, x=x_st)
@settings(max_examples=200, deadline=None)
def test_pythagorean_identity(kappa, x):
    c2 = ck(kappa, x) ** 2
    s2 = abs(kappa) * sk(kappa, x) ** 2
    scale = 1.0 + c2 + s2
    assert abs(ck(kappa, x) ** 2 + kappa * sk(kappa, x) ** 2 - 1.0) < 1e-12 * scale


@given(kappa=kappa_st, x=x_st, y=x_st)
@settings(max_examples=200, deadline=None)
def test_addition_formulas(kappa, x, y):
    lhs_c = ck(kappa, x + y)
    rhs_c = ck(kappa, x) * ck(kappa, y) - kappa * sk(kappa, x) * sk(kappa, y)
    lhs_s = sk(kappa, x + y)
    rhs_s = sk(kappa, x) * ck(kappa, y) + ck(kappa, x) * sk(kappa, y)
    scale = 1.0 + abs(lhs_c) + abs(lhs_s) + abs(kappa * sk(kappa, x) * sk(kappa, y))
    assert abs(lhs_c - rhs_c) < 1e-11 * scale
    assert abs(lhs_s - rhs_s) < 1e-11 * scale


@given(kappa=kappa_st, x=x_st)
@settings(max_examples=100, deadline=None)
def test_versed_relation(kappa, x):
    # ck + kappa vk = 1
    assert abs(ck(kappa, x) + kappa * vk(kappa, x) - 1.0) < 1e-12


@given(kappa=kappa_st, x=x_st)
@settings(max_examples=100, deadline=None)
def test_parity(kappa, x):
    assert ck(kappa, -x) == pytest.approx(ck(kappa, x), abs=1e-15)
    assert sk(kappa, -x) == pytest.approx(-sk(kappa, x), abs=1e-15)


@pytest.mark.parametrize("kappa", KAPPAS)
def test_derivatives_by_central_difference(kappa):
    h = 1e-6
    for x in [-1.4, -0.3, 0.0, 0.8, 2.1]:
        d_sk = (sk(kappa, x + h) - sk(kappa, x - h)) / (2 * h)
        d_ck = (ck(kappa, x + h) - ck(kappa, x - h)) / (2 * h)
        d_vk = (vk(kappa, x + h) - vk(kappa, x - h)) / (2 * h)
        assert abs(d_sk - ck(kappa, x)) < 1e-9
        assert abs(d_ck + kappa * sk(kappa, x)) < 1e-9
        assert abs(d_vk - sk(kappa, x)) < 1e-9


def test_small_label_branch_agrees_with_closed_form():
    # just below and above the series cutoff the two evaluations agree
    for kappa in (9e-13, -9e-13):
        for x in (0.5, 1.5, 3.0):
            exact_c = math.cos(math.sqrt(abs(kappa)) * x) if kappa > 0 else math.cosh(
                math.sqrt(abs(kappa)) * x
            )
            assert abs(ck(kappa, x) - exact_c) < 1e-15
            assert abs(sk(kappa, x) - ref_sk(kappa, x)) < 1e-15


def test_tangent_pole_raises():
    with pytest.raises(PoleError):
        tk(1.0, math.pi / 2)


def test_half_period():
    assert half_period(1.0) == pytest.approx(math.pi)
    assert half_period(4.0) == pytest.approx(math.pi / 2)
    assert math.isinf(half_period(0.0))
    assert math.isinf(half_period(-1.0))


@given(
    kappa=st.floats(min_value=-4.0, max_value=4.0, allow_nan=False),
    x=st.floats(min_value=-1.2, max_value=1.2, allow_nan=False),
)
@settings(max_examples=200, deadline=None)
def test_kinv_roundtrip(kappa, x):
    # stay inside one principal branch for positive labels
    if kappa > 0:
        quarter = half_period(kappa) / 2.0
        if abs(x) > 0.9 * quarter:
            return
    recovered = kinv(kappa, sk(kappa, x), ck(kappa, x))
    assert abs(recovered - x) < 1e-10


def test_kinv_rejects_off_curve_points():
    with pytest.raises(Exception):
        kinv(1.0, 5.0, 5.0)
