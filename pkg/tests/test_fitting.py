"""Least-squares recovery of expansion coefficients and symbolic readback."""
from fractions import Fraction

import mpmath
import pytest

from graphasym import SymConst, lsq_fit, reconstruct_symbolic
from graphasym.errors import IllConditioned, InsufficientPoints

F = Fraction
RAT = SymConst.rational
XI = SymConst.xi


def _synthetic_values(coeffs, n_min, n_max, bits=256):
    """Exact evaluations of a polynomial in x = n^(-1/2)."""
    vals = {}
    with mpmath.workprec(bits):
        for n in range(n_min, n_max + 1):
            x = 1 / mpmath.sqrt(n)
            acc = mpmath.mpf(0)
            for c in reversed(coeffs):
                acc = acc * x + mpmath.mpf(c.numerator) / c.denominator
            vals[n] = acc
    return vals


def test_synthetic_polynomial_recovered_to_working_precision():
    coeffs = [F(2), F(-1), F(0), F(1, 3)]
    vals = _synthetic_values(coeffs, 100, 160)
    result = lsq_fit(0, degree=3, n_min=100, n_max=160, values=vals)
    with mpmath.workprec(256):
        for est, c in zip(result.estimates, coeffs):
            target = mpmath.mpf(c.numerator) / c.denominator
            assert abs(est - target) < mpmath.mpf(10) ** -60
    assert float(result.residual_rms) < 1e-60
    assert float(result.condition) < 100  # thanks to the affine rescale to [-1, 1]


def test_overparameterized_fit_still_recovers():
    # fitting degree 5 to a degree-2 signal: trailing estimates ~ 0
    coeffs = [F(1, 4), F(-7, 6), F(1, 48)]
    vals = _synthetic_values(coeffs, 100, 200)
    result = lsq_fit(0, degree=5, n_min=100, n_max=200, values=vals)
    with mpmath.workprec(256):
        for est, c in zip(result.estimates[:3], coeffs):
            target = mpmath.mpf(c.numerator) / c.denominator
            assert abs(est - target) < mpmath.mpf(10) ** -40
        for est in result.estimates[3:]:
            assert abs(est) < mpmath.mpf(10) ** -40


def test_insufficient_points():
    with pytest.raises(InsufficientPoints):
        lsq_fit(0, degree=6, n_min=100, n_max=104)


def test_ill_conditioned_detected():
    vals = {n: mpmath.mpf(1) for n in range(100, 131)}
    with pytest.raises(IllConditioned):
        lsq_fit(0, degree=30, n_min=100, n_max=130, bits=64, values=vals)


def test_real_fit_against_known_row():
    # c(n, n)/n^(n-1/2) -> xi/4 - (7/6) n^(-1/2) + ...
    result = lsq_fit(0, degree=4, n_min=100, n_max=300)
    expected = [XI(F(1, 4)), RAT(F(-7, 6)), XI(F(1, 48))]
    for j, sym in enumerate(expected):
        target = sym.evaluate(result.bits)
        assert abs((result.estimates[j] - target) / target) < 1e-4, j


def test_reconstruct_symbolic_examples():
    assert reconstruct_symbolic(mpmath.mpf("0.6266570687"), 10000) == XI(F(1, 4))
    assert reconstruct_symbolic(mpmath.mpf("0.2083333333"), 10000) == RAT(F(5, 24))
    assert reconstruct_symbolic(mpmath.mpf("0.123456"), 10) is None
    # prefers the simpler (smaller-denominator) candidate on ties
    with mpmath.workprec(256):
        v = mpmath.mpf(3) / 8
    assert reconstruct_symbolic(v, 10000) == RAT(F(3, 8))
    # negative xi multiples
    with mpmath.workprec(256):
        v = -7 * mpmath.sqrt(2 * mpmath.pi) / 24
    assert reconstruct_symbolic(v, 10000) == XI(F(-7, 24))


def test_reconstruct_symbolic_rejects_generic_values():
    # a quadratic irrational sits at generic distance from every rational,
    # so no candidate clears the err * q**2 significance bound even with a
    # tolerance wide enough to admit anything
    with mpmath.workprec(256):
        v = mpmath.sqrt(2) - 1
    assert reconstruct_symbolic(v, 10000, tolerance=1.0) is None
    # exactness of the value is not required, only statistical significance
    assert reconstruct_symbolic(mpmath.mpf("0.3333333333"), 10000) == RAT(F(1, 3))


def test_fit_result_serialization():
    vals = _synthetic_values([F(1), F(2)], 100, 140)
    result = lsq_fit(0, degree=1, n_min=100, n_max=140, values=vals)
    d = result.to_json_dict()
    assert d["degree"] == 1
    assert d["npoints"] == 41
    assert isinstance(d["estimates"][0], str)
    assert float(d["estimates"][0]) == pytest.approx(1.0, abs=1e-12)
