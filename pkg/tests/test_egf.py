from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permcheb.egf import (
    EgfSeries,
    coefficients_as_ints,
    cos_series,
    cosh_series,
    exp_series,
    sec_plus_tan,
    sin_series,
)
from permcheb.exact import MPoly

from conftest import polys

ORDER = 8


@st.composite
def series(draw, c0=None, order=ORDER):
    coeffs = [draw(polys(variables=("s", "t"), max_terms=2, max_deg=2)) for _ in range(order + 1)]
    if c0 is not None:
        coeffs[0] = MPoly.const(c0)
    return EgfSeries.from_coeffs(coeffs)


def test_exp_times_exp_is_exp_double():
    assert exp_series(10) * exp_series(10) == exp_series(10, 2)


def test_trig_identities():
    c, sn = cos_series(12), sin_series(12)
    assert c * c + sn * sn == EgfSeries.one(12)
    assert cosh_series(12) == (exp_series(12) + exp_series(12, -1)) / 2


def test_euler_numbers():
    got = coefficients_as_ints(sec_plus_tan(12))
    assert got == [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765]


def test_binomial_convolution():
    x = EgfSeries.x(5)
    # x * x = 2 * x^2/2!
    assert (x * x)[2] == 2
    assert (x * x)[1] == 0


def test_truncation_to_min_order():
    assert (exp_series(4) + exp_series(7)).order == 4


def test_error_paths():
    with pytest.raises(ValueError):
        EgfSeries.x(4).reciprocal()
    with pytest.raises(ValueError):
        exp_series(4).exp()
    with pytest.raises(ValueError):
        (exp_series(4) * 2).log()
    with pytest.raises(ValueError):
        (exp_series(4) * 2).pow(2)
    with pytest.raises(ValueError):
        EgfSeries.one(0).derivative()


def test_symbolic_power_of_exp():
    w = MPoly.var("w")
    assert exp_series(6).pow(w) == exp_series(6, w)


def test_eval_float():
    assert exp_series(24).eval_float({}, 0.2) == pytest.approx(1.2214027581601699, rel=1e-12)


def test_lines_and_json():
    assert exp_series(2, MPoly.var("t")).lines() == ["0: 1", "1: t", "2: t^2"]
    assert EgfSeries.x(1).to_json() == ["0", "1"]


@settings(max_examples=40, deadline=None)
@given(series(c0=1))
def test_reciprocal(a):
    assert a * a.reciprocal() == EgfSeries.one(ORDER)


@settings(max_examples=40, deadline=None)
@given(series(c0=Fraction(3, 2)))
def test_reciprocal_nonunit_constant(a):
    assert a * a.reciprocal() == EgfSeries.one(ORDER)


@settings(max_examples=25, deadline=None)
@given(series(c0=1))
def test_exp_log_inverse_pair(a):
    assert a.log().exp() == a


@settings(max_examples=25, deadline=None)
@given(series(c0=0))
def test_log_exp_inverse_pair(a):
    assert a.exp().log() == a


@settings(max_examples=40, deadline=None)
@given(series(), series())
def test_leibniz(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@settings(max_examples=25, deadline=None)
@given(series(c0=1, order=6), st.integers(-3, 3), st.integers(-3, 3))
def test_pow_additivity(a, m, n):
    assert a.pow(m + n) == a.pow(m) * a.pow(n)
    if m >= 0:
        manual = EgfSeries.one(6)
        for _ in range(m):
            manual = manual * a
        assert a.pow(m) == manual


@settings(max_examples=15, deadline=None)
@given(series(c0=1, order=6))
def test_symbolic_pow_additivity(a):
    u, v = MPoly.var("u"), MPoly.var("v")
    assert a.pow(u + v) == a.pow(u) * a.pow(v)


@settings(max_examples=40, deadline=None)
@given(series())
def test_integral_inverts_derivative(a):
    assert a.derivative().integral(a[0]) == a
    assert a.integral().derivative() == a
