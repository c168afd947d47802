"""Count decompositions, the three asymptotic families, and cross-checks."""
from fractions import Fraction
from math import comb

import mpmath
import pytest

from graphasym import (
    SymConst,
    asym_c,
    asym_g,
    asym_p,
    connected_counts,
    decompose,
    exact_count_via_t,
    exact_probability,
    exact_total,
    expansion_table,
    fss_crosscheck,
)
from graphasym.assembly import exact_value, expansion, normalization
from graphasym.errors import CrosscheckFailure

F = Fraction
RAT = SymConst.rational
XI = SymConst.xi


def test_decompose_excess_zero():
    dec = decompose(0)
    assert dec.qterm == F(1, 2)
    assert dec.constant == 0
    assert dec.beta_dict() == {-1: F(1), -2: F(-1, 4)}


def test_decompose_excess_one():
    dec = decompose(1)
    assert dec.qterm == 0
    assert dec.constant == 0
    assert dec.beta_dict() == {
        3: F(5, 24),
        2: F(-19, 24),
        1: F(13, 12),
        0: F(-7, 12),
        -1: F(1, 24),
        -2: F(1, 24),
    }


def test_decompositions_reproduce_counts_beyond_construction_check():
    table = connected_counts(16, 4)
    for k in range(0, 5):
        dec = decompose(k)
        for n in range(1, 17):
            assert dec.evaluate(n) == table.get(n, n + k), (n, k)


def test_exact_count_via_t():
    table = connected_counts(14, 3)
    for n in range(1, 15):
        assert exact_count_via_t(n, -1) == n ** max(n - 2, 0)
        for k in range(0, 4):
            assert exact_count_via_t(n, k) == table.get(n, n + k)


def test_connected_expansion_rows():
    rows = {
        0: (XI(F(1, 4)), RAT(F(-7, 6)), XI(F(1, 48)), RAT(F(131, 270)),
            XI(F(1, 1152)), RAT(F(4, 2835))),
        1: (RAT(F(5, 24)), XI(F(-7, 24)), RAT(F(25, 36)), XI(F(-7, 288)),
            RAT(F(-79, 3240)), XI(F(-7, 6912))),
        2: (XI(F(5, 256)), RAT(F(-35, 144)), XI(F(1559, 9216)), RAT(F(-55, 144)),
            XI(F(33055, 221184)), RAT(F(-41971, 136080))),
    }
    for k, row in rows.items():
        series = asym_c(k, 5)
        assert series.lead == 0
        for j, c in enumerate(row):
            assert series.coefficient_at(-j) == c, (k, j)


def test_connected_expansion_higher_excess_leading_terms():
    assert asym_c(3, 1).coefficient_at(0) == RAT(F(221, 24192))
    assert asym_c(3, 1).coefficient_at(-1) == XI(F(-35, 1536))
    assert asym_c(4, 0).coefficient_at(0) == XI(F(113, 196608))


def test_connected_expansion_tree_case_is_exact():
    series = asym_c(-1, 3)
    assert series.coefficient_at(0) == RAT(1)
    assert all(series.coefficient_at(-j).is_zero() for j in range(1, 4))


def test_connected_expansion_numeric():
    n = 2048
    for k, tol in ((0, 1e-8), (1, 1e-8), (2, 1e-7)):
        series = asym_c(k, 5)
        c = exact_count_via_t(n, k)
        with mpmath.workprec(512):
            exact = mpmath.mpf(c) / normalization("connected").evaluate(k, n, 512)
            approx = series.evaluate(n, bits=512)
            assert abs(exact - approx) / exact < tol, k


def test_total_expansion_rows():
    rows = {
        -1: (F(1), F(7, 4), F(259, 96), F(22393, 5760), F(54359, 10240),
             F(52279961, 7741440)),
        0: (F(1, 2), F(-5, 8), F(-53, 192), F(-4067, 11520), F(-9817, 20480),
            F(-10813867, 15482880)),
        1: (F(1, 4), F(-21, 16), F(811, 384), F(-43187, 23040), F(159571, 73728),
            F(-55568731, 30965760)),
    }
    for k, row in rows.items():
        series = asym_g(k, 5)
        for j, c in enumerate(row):
            assert series.coefficient_at(-2 * j) == RAT(c), (k, j)
            if j:  # odd half-powers vanish: the expansion is in whole powers
                assert series.coefficient_at(-2 * j + 1).is_zero()


def test_total_expansion_leading_term_general_k():
    for k in range(-1, 9):
        assert asym_g(k, 0).coefficient_at(0) == RAT(F(1, 2 ** (k + 1)))


def test_total_expansion_numeric():
    n = 1024
    for k in (-1, 0, 1, 2):
        series = asym_g(k, 4)
        g = exact_total(n, k)
        with mpmath.workprec(1024):
            exact = mpmath.mpf(g) / normalization("total").evaluate(k, n, 1024)
            approx = series.evaluate(n, bits=1024)
            # remainder ~ c n^-5 with c growing with k; observed <= 4.3e-13
            assert abs(exact - approx) / exact < 1e-11, k


def test_probability_expansion_rows():
    rows = {
        -1: (RAT(F(1, 2)), RAT(0), RAT(F(-7, 8)), RAT(0), RAT(F(35, 192))),
        0: (XI(F(1, 4)), RAT(F(-7, 6)), XI(F(1, 3)), RAT(F(-1051, 1080)),
            XI(F(5, 9))),
        1: (RAT(F(5, 12)), XI(F(-7, 12)), RAT(F(515, 144)), XI(F(-28, 9)),
            RAT(F(788347, 51840))),
    }
    for k, row in rows.items():
        series = asym_p(k, 4)
        for j, c in enumerate(row):
            assert series.coefficient_at(-j) == c, (k, j)


def test_probability_expansion_numeric():
    n = 1024
    for k in (-1, 0, 1):
        series = asym_p(k, 4)
        p = exact_probability(n, k)
        with mpmath.workprec(1024):
            exact = (mpmath.mpf(p.numerator) / p.denominator) / normalization(
                "probability"
            ).evaluate(k, n, 1024)
            approx = series.evaluate(n, bits=1024)
            # remainder ~ c n^(-5/2) with c up to ~70 at k=1; observed <= 2.2e-6
            assert abs(exact - approx) / abs(exact) < 2e-5, k


def test_probability_is_quotient_of_families():
    # P = c/g, so the three normalized families must recombine numerically
    n, k = 512, 1
    with mpmath.workprec(512):
        lhs = exact_probability(n, k)
        lhs = mpmath.mpf(lhs.numerator) / lhs.denominator
        rhs = mpmath.mpf(exact_count_via_t(n, k)) / exact_total(n, k)
        assert abs(lhs - rhs) / lhs < mpmath.mpf(2) ** -400


def test_exact_total_and_probability():
    assert exact_total(5, 0) == comb(10, 5) == 252
    assert exact_probability(5, 0) == F(222, 252)
    assert exact_value("connected", 5, 0) == 222
    assert exact_value("total", 5, 0) == 252
    assert exact_value("probability", 5, 0) == F(222, 252)


def test_fss_crosscheck_report():
    report = fss_crosscheck(2)
    assert report.passed
    assert report.k == 2
    assert float(report.rel_a0) < 1e-12
    assert float(report.rel_ratio) < 1e-12
    assert report.tolerance == 1e-12


def test_fss_crosscheck_failure_path():
    with pytest.raises(CrosscheckFailure):
        fss_crosscheck(2, bits=64, tolerance=1e-60)


def test_expansion_dispatch():
    assert expansion("connected", 1, 2).coefficient_at(0) == RAT(F(5, 24))
    assert expansion("total", 0, 1).coefficient_at(0) == RAT(F(1, 2))
    assert expansion("probability", -1, 1).coefficient_at(0) == RAT(F(1, 2))
    with pytest.raises(KeyError):
        expansion("nonsense", 0, 1)


def test_expansion_table_csv():
    table = expansion_table("connected", (0, 1), 3)
    lines = list(table.csv_rows())
    assert lines[0] == "k,j,power_of_n,coeff_rat,coeff_xi_rat"
    assert "0,0,0,0,1/4" in lines          # xi/4 at n^0
    assert "1,1,-1/2,0,-7/24" in lines     # -7 xi/24 at n^(-1/2)
    d = table.to_json_dict()
    assert d["kind"] == "connected"
    assert set(d["rows"]) == {"0", "1"}
